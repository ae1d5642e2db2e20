#include <cmath>
#include <cstdio>
#include <limits>
#include <regex>
#include <stdexcept>
#include <string>

#include "scorer/cli.hpp"

namespace scorer::cli {

std::string_view to_string(Function fn) {
  switch (fn) {
    case Function::gi: return "gi";
    case Function::hi: return "hi";
    case Function::ai: return "ai";
    case Function::bi: return "bi";
  }
  return "unknown";
}

Function parse_function(std::string_view name) {
  if (name == "gi") return Function::gi;
  if (name == "hi") return Function::hi;
  if (name == "ai") return Function::ai;
  if (name == "bi") return Function::bi;
  throw std::invalid_argument("unknown function '" + std::string(name) +
                              "' (expected gi, hi, ai or bi)");
}

OutputRecord evaluate(Function fn, Complex z, const EngineConfig& cfg) {
  OutputRecord rec;
  rec.z_re = z.real();
  rec.z_im = z.imag();
  rec.function = std::string(to_string(fn));
  if (fn == Function::ai || fn == Function::bi) {
    const airy::AiryPair p = fn == Function::ai ? airy::ai(z, cfg.airy) : airy::bi(z, cfg.airy);
    rec.value_re = p.value.real();
    rec.value_im = p.value.imag();
    rec.method = "airy";
    rec.abs_error_estimate = 256.0 * std::numeric_limits<double>::epsilon() * std::abs(p.value);
    rec.n_evaluations = 1;
    rec.converged = p.converged;
    return rec;
  }
  const ScorerResult r = fn == Function::gi ? gi(z, cfg) : hi(z, cfg);
  rec.value_re = r.value.real();
  rec.value_im = r.value.imag();
  rec.method = r.trace;
  rec.abs_error_estimate = r.abs_error_estimate;
  rec.n_evaluations = r.n_evaluations;
  rec.converged = r.converged;
  return rec;
}

namespace {

std::string format_g(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string format_e15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15e", v);
  return buf;
}

std::string signed_imag(double im, int digits) {
  const std::string mag = format_g(std::abs(im), digits);
  return (std::signbit(im) ? " - " : " + ") + mag + "i";
}

}  // namespace

std::string to_text(const OutputRecord& rec, int digits) {
  if (digits < 1 || digits > kMaxDigits) {
    throw std::invalid_argument("digits must be between 1 and 15");
  }
  std::string s = rec.function + "(" + format_g(rec.z_re, digits) +
                  signed_imag(rec.z_im, digits) + ") = " + format_g(rec.value_re, digits) +
                  signed_imag(rec.value_im, digits);
  s += "  [" + rec.method + ", err " + format_g(rec.abs_error_estimate, 2) + ", n " +
       std::to_string(rec.n_evaluations) + (rec.converged ? "" : ", NOT CONVERGED") + "]";
  return s;
}

std::string csv_header() {
  return "z_re,z_im,function,value_re,value_im,method,abs_error_estimate,n_evaluations";
}

std::string to_csv(const OutputRecord& rec) {
  return format_e15(rec.z_re) + "," + format_e15(rec.z_im) + "," + rec.function + "," +
         format_e15(rec.value_re) + "," + format_e15(rec.value_im) + "," + rec.method + "," +
         format_e15(rec.abs_error_estimate) + "," + std::to_string(rec.n_evaluations);
}

nlohmann::json to_json(const OutputRecord& rec) {
  return {{"z_re", rec.z_re},
          {"z_im", rec.z_im},
          {"function", rec.function},
          {"value_re", rec.value_re},
          {"value_im", rec.value_im},
          {"method", rec.method},
          {"abs_error_estimate", rec.abs_error_estimate},
          {"n_evaluations", rec.n_evaluations},
          {"converged", rec.converged}};
}

OutputRecord from_json(const nlohmann::json& j) {
  OutputRecord rec;
  j.at("z_re").get_to(rec.z_re);
  j.at("z_im").get_to(rec.z_im);
  j.at("function").get_to(rec.function);
  j.at("value_re").get_to(rec.value_re);
  j.at("value_im").get_to(rec.value_im);
  j.at("method").get_to(rec.method);
  j.at("abs_error_estimate").get_to(rec.abs_error_estimate);
  j.at("n_evaluations").get_to(rec.n_evaluations);
  if (j.contains("converged")) {
    j.at("converged").get_to(rec.converged);
  }
  return rec;
}

double parse_phase(std::string_view text) {
  static const std::regex pi_form(
      R"(^\s*([+-]?)\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*\*?\s*pi\s*(?:/\s*((?:\d+\.?\d*|\.\d+)))?\s*$)");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, pi_form)) {
    const double coef = m[2].matched ? std::stod(m[2].str()) : 1.0;
    const double den = m[3].matched ? std::stod(m[3].str()) : 1.0;
    if (den == 0.0) {
      throw std::invalid_argument("phase '" + s + "' divides by zero");
    }
    const double value = coef * kPi / den;
    return m[1].str() == "-" ? -value : value;
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse phase '" + s + "'");
  }
  if (s.find_first_not_of(" \t", used) != std::string::npos || !std::isfinite(value)) {
    throw std::invalid_argument("cannot parse phase '" + s + "'");
  }
  return value;
}

}  // namespace scorer::cli
