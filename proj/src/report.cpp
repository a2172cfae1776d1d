#include "prhr/report.hpp"

#include <cstdio>

#include "prhr/asymptotic.hpp"
#include "prhr/empirical_likelihood.hpp"
#include "prhr/errors.hpp"
#include "prhr/ustat.hpp"

namespace prhr {

namespace {

bool sign_gate(int direction_sign, Alternative alt) {
  return alt == Alternative::increasing ? direction_sign > 0 : direction_sign < 0;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char ch : s) {
    switch (ch) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
}

// Writes the shared method fields and leaves the object open so the
// caller can append method-specific ones.
void open_method(std::string& out, const char* name, const MethodOutcome& mo) {
  out += '"';
  out += name;
  out += "\":{\"degenerate\":";
  out += mo.degenerate ? "true" : "false";
  out += ",\"reason\":";
  if (mo.degenerate) {
    append_escaped(out, mo.reason);
  } else {
    out += "null";
  }
  out += ",\"statistic\":";
  out += mo.degenerate ? "null" : fmt(mo.statistic);
  out += ",\"p_value\":";
  out += mo.degenerate ? "null" : fmt(mo.p_value);
  out += ",\"reject\":";
  out += mo.reject ? "true" : "false";
  out += ",\"direction_sign\":";
  out += std::to_string(mo.direction_sign);
}

}  // namespace

TestReport run_all_tests(const Sample& x, const Sample& y, const TestOptions& options) {
  if (!(options.alpha > 0.0 && options.alpha < 1.0)) {
    throw DomainError("alpha must lie in (0,1)");
  }

  const UStatSummary summary = u_statistic(x, y);
  const MwEstimate mw = mw_estimate(x, y);

  TestReport report;
  report.m = summary.m;
  report.n = summary.n;
  report.x_label = x.label();
  report.y_label = y.label();
  report.alternative = options.alternative;
  report.alpha = options.alpha;
  report.u = summary.u();
  report.tau = mw.tau;
  report.theta = mw.theta;

  try {
    const UmwReport r = umw_test(summary, mw, options.alternative, options.theta_override);
    report.umw.statistic = r.statistic;
    report.umw.p_value = r.p_value;
    report.umw.direction_sign = report.u > 0.0 ? 1 : (report.u < 0.0 ? -1 : 0);
    report.umw.reject = r.p_value <= options.alpha;
    report.sigma10_sq = r.sigma10_sq;
    report.sigma01_sq = r.sigma01_sq;
    report.theta_used = r.theta_used;
  } catch (const DegenerateEstimateError& e) {
    report.umw.degenerate = true;
    report.umw.reason = e.what();
  }

  try {
    const ElReport r = jel_test(summary);
    report.jel.statistic = r.statistic;
    report.jel.p_value = r.p_value;
    report.jel.direction_sign = r.direction_sign;
    report.jel.reject =
        r.p_value <= options.alpha && sign_gate(r.direction_sign, options.alternative);
  } catch (const HullViolationError&) {
    report.jel.degenerate = true;
    report.jel.reason = "pseudo-values are all of one sign; use the adjusted variant";
  }

  const ElReport r = ajel_test(summary);
  report.ajel.statistic = r.statistic;
  report.ajel.p_value = r.p_value;
  report.ajel.direction_sign = r.direction_sign;
  report.ajel.reject =
      r.p_value <= options.alpha && sign_gate(r.direction_sign, options.alternative);

  return report;
}

std::string to_json(const TestReport& report) {
  std::string out;
  out.reserve(1024);
  out += "{\"m\":";
  out += std::to_string(report.m);
  out += ",\"n\":";
  out += std::to_string(report.n);
  out += ",\"x_label\":";
  append_escaped(out, report.x_label);
  out += ",\"y_label\":";
  append_escaped(out, report.y_label);
  out += ",\"alternative\":";
  append_escaped(out, to_string(report.alternative));
  out += ",\"alpha\":";
  out += fmt(report.alpha);
  out += ",\"u\":";
  out += fmt(report.u);
  out += ",\"tau_hat\":";
  out += fmt(report.tau);
  out += ",\"theta_hat\":";
  out += report.theta ? fmt(*report.theta) : "null";
  out += ",\"tests\":{";
  open_method(out, "umw", report.umw);
  out += ",\"theta_used\":";
  out += report.umw.degenerate ? "null" : fmt(report.theta_used);
  out += ",\"sigma10_sq\":";
  out += report.umw.degenerate ? "null" : fmt(report.sigma10_sq);
  out += ",\"sigma01_sq\":";
  out += report.umw.degenerate ? "null" : fmt(report.sigma01_sq);
  out += "},";
  open_method(out, "jel", report.jel);
  out += "},";
  open_method(out, "ajel", report.ajel);
  out += "}}}";
  return out;
}

}  // namespace prhr
