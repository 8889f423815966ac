#include "qid/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "qid/errors.hpp"

namespace qid {

namespace {

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_real(std::string_view text, std::string_view whole) {
  double x = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, x);
  if (text.empty() || ec != std::errc{} || ptr != last || !std::isfinite(x)) {
    throw ParseError("malformed scalar '" + std::string(whole) + "'");
  }
  return x;
}

void dump_into(std::string& out, const nlohmann::ordered_json& j, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + nlohmann::json(key).dump() + ": ";
        dump_into(out, value, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump_into(out, j[i], depth + 1);
      }
      out += "\n" + close + "]";
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_real(x) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string format_scalar(Scalar v) {
  if (v.imag() == 0.0) return format_real(v.real());
  std::string im = format_real(v.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return format_real(v.real()) + im + "i";
}

Scalar parse_scalar(std::string_view text) {
  if (text.empty()) throw ParseError("empty scalar");
  if (text.back() != 'i') return {parse_real(text, text), 0.0};
  const std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) throw ParseError("malformed scalar '" + std::string(text) + "'");
  return {parse_real(body.substr(0, split), text), parse_real(body.substr(split), text)};
}

std::vector<Scalar> parse_scalar_list(std::string_view csv) {
  std::vector<Scalar> out;
  if (csv.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = csv.find(',', start);
    out.push_back(parse_scalar(csv.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

SampleRecord record(std::size_t index, const CheckResult& r) {
  SampleRecord s;
  s.index = index;
  for (const auto& [k, v] : r.params.entries()) s.params.emplace_back(k, format_scalar(v));
  s.lhs = format_scalar(r.lhs.value);
  s.rhs = format_scalar(r.rhs.value);
  s.rel_err = r.rel_err;
  s.effective_tol = r.effective_tol;
  s.cancellation_digits = r.cancellation_digits();
  s.pass = r.pass;
  return s;
}

SampleRecord error_record(std::size_t index, const Params& p, std::string message) {
  SampleRecord s;
  s.index = index;
  for (const auto& [k, v] : p.entries()) s.params.emplace_back(k, format_scalar(v));
  s.rel_err = std::numeric_limits<double>::infinity();
  s.error = std::move(message);
  return s;
}

Summary summarize(const std::vector<SampleRecord>& samples) {
  Summary out;
  out.count = samples.size();
  double total = 0.0;
  std::size_t finite = 0;
  for (const auto& s : samples) {
    if (s.pass) ++out.passed;
    if (std::isfinite(s.rel_err)) {
      out.max_rel_err = std::max(out.max_rel_err, s.rel_err);
      total += s.rel_err;
      ++finite;
    }
  }
  out.mean_rel_err = finite ? total / static_cast<double>(finite) : 0.0;
  return out;
}

nlohmann::ordered_json to_json(const Report& r) {
  using nlohmann::ordered_json;
  ordered_json samples = ordered_json::array();
  for (const auto& s : r.samples) {
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : s.params) params[k] = v;
    ordered_json js;
    js["index"] = s.index;
    js["params"] = params;
    if (s.m) js["m"] = *s.m;
    if (s.c) js["c"] = *s.c;
    js["lhs"] = s.lhs;
    js["rhs"] = s.rhs;
    js["rel_err"] = s.rel_err;
    js["effective_tol"] = s.effective_tol;
    js["cancellation_digits"] = s.cancellation_digits;
    js["pass"] = s.pass;
    if (s.error) js["error"] = *s.error;
    samples.push_back(std::move(js));
  }
  ordered_json j;
  j["schema_version"] = r.schema_version;
  j["identity"] = r.identity;
  j["seed"] = r.seed;
  j["tol"] = r.tol;
  j["samples"] = std::move(samples);
  j["summary"] = {{"count", r.summary.count},
                  {"passed", r.summary.passed},
                  {"max_rel_err", r.summary.max_rel_err},
                  {"mean_rel_err", r.summary.mean_rel_err}};
  return j;
}

Report report_from_json(const nlohmann::ordered_json& j) {
  try {
    Report r;
    r.schema_version = j.at("schema_version").get<std::string>();
    r.identity = j.at("identity").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.tol = j.at("tol").get<double>();
    for (const auto& js : j.at("samples")) {
      SampleRecord s;
      s.index = js.at("index").get<std::size_t>();
      for (const auto& [k, v] : js.at("params").items()) s.params.emplace_back(k, v.get<std::string>());
      if (js.contains("m")) s.m = js.at("m").get<int>();
      if (js.contains("c")) s.c = js.at("c").get<std::string>();
      s.lhs = js.at("lhs").get<std::string>();
      s.rhs = js.at("rhs").get<std::string>();
      const auto& re = js.at("rel_err");
      s.rel_err = re.is_null() ? std::numeric_limits<double>::infinity() : re.get<double>();
      s.effective_tol = js.at("effective_tol").get<double>();
      s.cancellation_digits = js.at("cancellation_digits").get<double>();
      s.pass = js.at("pass").get<bool>();
      if (js.contains("error")) s.error = js.at("error").get<std::string>();
      r.samples.push_back(std::move(s));
    }
    const auto& sj = j.at("summary");
    r.summary.count = sj.at("count").get<std::size_t>();
    r.summary.passed = sj.at("passed").get<std::size_t>();
    r.summary.max_rel_err = sj.at("max_rel_err").get<double>();
    r.summary.mean_rel_err = sj.at("mean_rel_err").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string dump(const nlohmann::ordered_json& j) {
  std::string out;
  dump_into(out, j, 0);
  out += "\n";
  return out;
}

}  // namespace qid
