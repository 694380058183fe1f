#include "scenetemp/model_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "scenetemp/errors.hpp"
#include "scenetemp/io.hpp"

namespace scenetemp {

namespace {

using nlohmann::json;

json parse_or_throw(std::istream& in, const std::string& origin) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SchemaMismatch, origin + ": " + e.what());
  }
}

// .at() keyed access with SchemaMismatch instead of json exceptions.
template <typename T>
T field(const json& doc, const char* key, const std::string& origin) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::SchemaMismatch,
                origin + ": missing or mistyped \"" + std::string(key) + "\"");
  }
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool parse_number(const std::string& f, double& out) {
  const char* begin = f.data();
  auto [ptr, ec] = std::from_chars(begin, begin + f.size(), out);
  return ec == std::errc() && ptr == begin + f.size() && std::isfinite(out);
}

}  // namespace

void write_lm_json(std::ostream& out, const LinearModel& model) {
  json doc;
  doc["slope"] = model.slope;
  doc["intercept"] = model.intercept;
  doc["n"] = model.n;
  doc["r_sse"] = model.r_sse;
  out << doc.dump(2) << '\n';
}

LinearModel read_lm_json(std::istream& in, const std::string& origin) {
  json doc = parse_or_throw(in, origin);
  LinearModel model;
  model.slope = field<double>(doc, "slope", origin);
  model.intercept = field<double>(doc, "intercept", origin);
  model.n = field<size_t>(doc, "n", origin);
  if (doc.contains("r_sse")) model.r_sse = field<double>(doc, "r_sse", origin);
  return model;
}

void write_mtm_json(std::ostream& out, const MtmModel& model) {
  json doc;
  doc["beta0"] = {model.beta0.c0, model.beta0.c1, model.beta0.c2};
  doc["beta1"] = {model.beta1.c0, model.beta1.c1, model.beta1.c2};
  doc["n_train_days"] = model.n_train_days;
  doc["sse"] = model.sse;
  out << doc.dump(2) << '\n';
}

MtmModel read_mtm_json(std::istream& in, const std::string& origin) {
  json doc = parse_or_throw(in, origin);
  MtmModel model;
  auto b0 = field<std::vector<double>>(doc, "beta0", origin);
  auto b1 = field<std::vector<double>>(doc, "beta1", origin);
  if (b0.size() != 3 || b1.size() != 3) {
    throw Error(ErrorCode::SchemaMismatch,
                origin + ": beta vectors must have 3 elements");
  }
  model.beta0 = {b0[0], b0[1], b0[2]};
  model.beta1 = {b1[0], b1[1], b1[2]};
  model.n_train_days = field<size_t>(doc, "n_train_days", origin);
  model.sse = field<double>(doc, "sse", origin);
  return model;
}

void write_stm_json(std::ostream& out, const StmModel& model) {
  json doc;
  doc["day0"] = {{"a0", model.day0_curve.a0},
                 {"a1", model.day0_curve.a1},
                 {"a2", model.day0_curve.a2}};
  doc["map_sigma"] = model.map_sigma;
  doc["log_posterior"] = model.log_posterior;
  doc["day0_date"] = format_date(model.ratios.day0_date);
  doc["ratios"] = json::array();
  for (const auto& e : model.ratios.entries) {
    doc["ratios"].push_back({{"j", e.day_offset}, {"h", e.h}});
  }
  out << doc.dump(2) << '\n';
}

StmModel read_stm_json(std::istream& in, const std::string& origin) {
  json doc = parse_or_throw(in, origin);
  StmModel model;
  const json& day0 = doc.contains("day0") ? doc.at("day0") : json();
  model.day0_curve.a0 = field<double>(day0, "a0", origin);
  model.day0_curve.a1 = field<double>(day0, "a1", origin);
  model.day0_curve.a2 = field<double>(day0, "a2", origin);
  model.map_sigma = field<double>(doc, "map_sigma", origin);
  model.log_posterior = field<double>(doc, "log_posterior", origin);
  if (doc.contains("day0_date")) {
    std::string text = field<std::string>(doc, "day0_date", origin);
    if (!parse_date(text, model.ratios.day0_date)) {
      throw Error(ErrorCode::SchemaMismatch,
                  origin + ": bad day0_date \"" + text + "\"");
    }
    model.day0_curve.date = model.ratios.day0_date;
  }
  for (const json& r : field<json>(doc, "ratios", origin)) {
    RatioSeries::Entry e;
    e.day_offset = field<int>(r, "j", origin);
    auto h = field<std::vector<double>>(r, "h", origin);
    if (h.size() != 3) {
      throw Error(ErrorCode::SchemaMismatch,
                  origin + ": ratio h must have 3 elements");
    }
    e.h = {h[0], h[1], h[2]};
    model.ratios.entries.push_back(e);
  }
  std::sort(model.ratios.entries.begin(), model.ratios.entries.end(),
            [](const auto& a, const auto& b) {
              return a.day_offset < b.day_offset;
            });
  return model;
}

void write_curves_csv(std::ostream& out,
                      const std::vector<DailyCurve>& curves) {
  out << "date,a0,a1,a2\n";
  for (const DailyCurve& c : curves) {
    out << format_date(c.date) << ',' << format_double(c.a0) << ','
        << format_double(c.a1) << ',' << format_double(c.a2) << '\n';
  }
}

std::vector<DailyCurve> read_curves_csv(std::istream& in,
                                        const std::string& origin) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::SchemaMismatch, origin + ": empty file");
  }
  if (strip_cr(line) != "date,a0,a1,a2") {
    throw Error(ErrorCode::SchemaMismatch,
                origin + ": expected header \"date,a0,a1,a2\", got \"" +
                    strip_cr(line) + "\"");
  }
  std::vector<DailyCurve> curves;
  std::vector<size_t> bad_rows;
  size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    line = strip_cr(line);
    if (line.empty()) continue;
    auto fields = split_fields(line);
    DailyCurve c;
    if (fields.size() != 4 || !parse_date(fields[0], c.date) ||
        !parse_number(fields[1], c.a0) || !parse_number(fields[2], c.a1) ||
        !parse_number(fields[3], c.a2)) {
      bad_rows.push_back(row);
      continue;
    }
    curves.push_back(c);
  }
  if (!bad_rows.empty()) {
    std::ostringstream msg;
    msg << origin << ": malformed row";
    if (bad_rows.size() > 1) msg << "s";
    msg << " ";
    for (size_t i = 0; i < bad_rows.size(); ++i) {
      if (i) msg << ",";
      msg << bad_rows[i];
    }
    throw Error(ErrorCode::MalformedRow, msg.str());
  }
  return curves;
}

std::map<std::string, std::string> parse_config(std::istream& in,
                                                const std::string& origin) {
  auto trim = [](std::string s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::map<std::string, std::string> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(strip_cr(line));
    if (line.empty() || line[0] == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::BadConfig,
                  origin + ":" + std::to_string(lineno) +
                      ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw Error(ErrorCode::BadConfig,
                  origin + ":" + std::to_string(lineno) + ": empty key");
    }
    if (!out.emplace(key, value).second) {
      throw Error(ErrorCode::BadConfig,
                  origin + ":" + std::to_string(lineno) +
                      ": duplicate key \"" + key + "\"");
    }
  }
  return out;
}

}  // namespace scenetemp
