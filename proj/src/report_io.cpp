#include "hwiener/report_io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "hwiener/errors.hpp"

namespace hwiener {

using nlohmann::json;

namespace {

Mode parse_mode(std::string_view s) {
  if (s == "exact") return Mode::Exact;
  if (s == "float") return Mode::Float;
  throw DomainError("unknown mode '" + std::string(s) + "'");
}

Monotonicity parse_monotonicity(std::string_view s) {
  for (auto m : {Monotonicity::StrictlyIncreasing, Monotonicity::StrictlyDecreasing, Monotonicity::Neither}) {
    if (to_string(m) == s) return m;
  }
  throw DomainError("unknown monotonicity '" + std::string(s) + "'");
}

double parse_double(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw DomainError("bad float '" + std::string(s) + "'");
  return v;
}

IndexValue value_from_strings(std::string name, std::string_view value, std::string_view mode) {
  if (parse_mode(mode) == Mode::Exact) return IndexValue::exact(std::move(name), Rational::parse(value));
  return IndexValue::floating(std::move(name), parse_double(value));
}

json optional_value(const std::optional<IndexValue>& v) { return v ? to_json(*v) : json(nullptr); }

std::optional<IndexValue> optional_value_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return index_value_from_json(j.at(key));
}

json forms_json(const std::set<CanonicalForm>& forms) {
  json arr = json::array();
  for (const auto& f : forms) arr.push_back(f.to_string());
  return arr;
}

std::set<CanonicalForm> forms_from(const json& arr) {
  std::set<CanonicalForm> out;
  for (const auto& s : arr) out.insert(CanonicalForm::parse(s.get<std::string>()));
  return out;
}

std::string join_forms(const std::set<CanonicalForm>& forms) {
  std::string out;
  for (const auto& f : forms) {
    if (!out.empty()) out += '|';
    out += f.to_string();
  }
  return out;
}

std::set<CanonicalForm> split_forms(std::string_view s) {
  std::set<CanonicalForm> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto bar = s.find('|', pos);
    if (bar == std::string_view::npos) bar = s.size();
    out.insert(CanonicalForm::parse(std::string(s.substr(pos, bar - pos))));
    pos = bar + 1;
  }
  return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) out.push_back(line);
    pos = nl + 1;
  }
  return out;
}

std::string edge_json_key(const Edge& e) { return std::to_string(e.first) + "-" + std::to_string(e.second); }

}  // namespace

json to_json(const IndexValue& v) {
  json j;
  j["index_name"] = v.index_name;
  if (v.mode() == Mode::Exact) {
    j["value"] = v.as_exact().to_string();
  } else {
    j["value"] = v.as_double();
  }
  j["mode"] = std::string(to_string(v.mode()));
  return j;
}

IndexValue index_value_from_json(const json& j) {
  auto name = j.at("index_name").get<std::string>();
  if (parse_mode(j.at("mode").get<std::string>()) == Mode::Exact) {
    return IndexValue::exact(std::move(name), Rational::parse(j.at("value").get<std::string>()));
  }
  return IndexValue::floating(std::move(name), j.at("value").get<double>());
}

json to_json(const VerificationReport& r) {
  json j;
  j["n"] = r.n;
  j["weight"] = r.weight;
  j["monotonicity"] = std::string(to_string(r.monotonicity));
  j["graphs_scanned"] = std::to_string(r.graphs_scanned);
  j["shards"] = r.shards;
  j["shard_count"] = r.shard_count;
  j["partial"] = r.partial();
  j["min"] = optional_value(r.min_value);
  j["max"] = optional_value(r.max_value);
  j["argmin_forms"] = forms_json(r.argmin_forms);
  j["argmax_forms"] = forms_json(r.argmax_forms);
  j["expected_min"] = optional_value(r.expected_min);
  j["expected_max"] = optional_value(r.expected_max);
  j["expected_argmin"] = r.expected_argmin ? json(r.expected_argmin->to_string()) : json(nullptr);
  j["expected_argmax"] = r.expected_argmax ? json(r.expected_argmax->to_string()) : json(nullptr);
  j["claims"] = {
      {"lower_value", std::string(to_string(r.claims.lower_value))},
      {"lower_unique", std::string(to_string(r.claims.lower_unique))},
      {"upper_value", std::string(to_string(r.claims.upper_value))},
      {"upper_unique", std::string(to_string(r.claims.upper_unique))},
  };
  j["passed"] = r.passed();
  j["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
  return j;
}

VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.n = j.at("n").get<int>();
  r.weight = j.at("weight").get<std::string>();
  r.monotonicity = parse_monotonicity(j.at("monotonicity").get<std::string>());
  r.graphs_scanned = std::stoull(j.at("graphs_scanned").get<std::string>());
  r.shards = j.at("shards").get<std::vector<int>>();
  r.shard_count = j.at("shard_count").get<int>();
  r.min_value = optional_value_from(j, "min");
  r.max_value = optional_value_from(j, "max");
  r.argmin_forms = forms_from(j.at("argmin_forms"));
  r.argmax_forms = forms_from(j.at("argmax_forms"));
  r.expected_min = optional_value_from(j, "expected_min");
  r.expected_max = optional_value_from(j, "expected_max");
  if (!j.at("expected_argmin").is_null()) r.expected_argmin = CanonicalForm::parse(j.at("expected_argmin").get<std::string>());
  if (!j.at("expected_argmax").is_null()) r.expected_argmax = CanonicalForm::parse(j.at("expected_argmax").get<std::string>());
  const auto& c = j.at("claims");
  r.claims.lower_value = parse_claim_status(c.at("lower_value").get<std::string>());
  r.claims.lower_unique = parse_claim_status(c.at("lower_unique").get<std::string>());
  r.claims.upper_value = parse_claim_status(c.at("upper_value").get<std::string>());
  r.claims.upper_unique = parse_claim_status(c.at("upper_unique").get<std::string>());
  if (!j.at("counterexample").is_null()) r.counterexample = j.at("counterexample").get<std::string>();
  return r;
}

json to_json(const std::vector<DominanceCheck>& checks) {
  json arr = json::array();
  for (const auto& c : checks) {
    arr.push_back({{"r", c.r}, {"n", c.n}, {"f3", to_json(c.f3)}, {"fr", to_json(c.fr)}, {"pass", c.pass}});
  }
  return arr;
}

json to_json(const SearchResult& result) {
  json steps = json::array();
  for (const auto& s : result.steps) {
    steps.push_back({
        {"kind", s.move.kind == MoveKind::TerminalMerge ? "terminal_merge" : "tail_rebalance"},
        {"vertices", s.move.vertices},
        {"removed", edge_json_key(s.move.removed)},
        {"added", edge_json_key(s.move.added)},
        {"before", to_json(s.before)},
        {"after", to_json(s.after)},
    });
  }
  json j;
  j["steps"] = steps;
  j["graph"] = to_edge_list(result.graph);
  return j;
}

std::string csv_field(std::string_view raw) {
  if (raw.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(raw);
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_record(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw DomainError("unterminated quote in CSV record");
  fields.push_back(std::move(cur));
  return fields;
}

std::string to_csv(const std::vector<IndexValue>& values) {
  std::string out(kIndexCsvHeader);
  out += '\n';
  for (const auto& v : values) {
    out += csv_field(v.index_name) + "," + csv_field(v.value_string()) + "," + std::string(to_string(v.mode())) + "\n";
  }
  return out;
}

std::vector<IndexValue> index_values_from_csv(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines.front() != kIndexCsvHeader) throw DomainError("missing index CSV header");
  std::vector<IndexValue> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split_csv_record(lines[i]);
    if (f.size() != 3) throw DomainError("index CSV rows need 3 fields");
    out.push_back(value_from_strings(f[0], f[1], f[2]));
  }
  return out;
}

std::string to_csv(const VerificationReport& r) {
  auto value = [](const std::optional<IndexValue>& v) { return v ? v->value_string() : std::string(); };
  auto mode = [](const std::optional<IndexValue>& v) { return v ? std::string(to_string(v->mode())) : std::string(); };
  std::string shards;
  for (int s : r.shards) {
    if (!shards.empty()) shards += ' ';
    shards += std::to_string(s);
  }
  std::vector<std::string> fields{
      std::to_string(r.n),
      r.weight,
      std::string(to_string(r.monotonicity)),
      std::to_string(r.graphs_scanned),
      shards,
      std::to_string(r.shard_count),
      value(r.min_value),
      mode(r.min_value),
      value(r.max_value),
      mode(r.max_value),
      join_forms(r.argmin_forms),
      join_forms(r.argmax_forms),
      std::string(to_string(r.claims.lower_value)),
      std::string(to_string(r.claims.lower_unique)),
      std::string(to_string(r.claims.upper_value)),
      std::string(to_string(r.claims.upper_unique)),
  };
  std::string out(kReportCsvHeader);
  out += '\n';
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  out += '\n';
  return out;
}

VerificationReport report_from_csv(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.size() != 2 || lines.front() != kReportCsvHeader) throw DomainError("expected report CSV header and one row");
  const auto f = split_csv_record(lines[1]);
  if (f.size() != 16) throw DomainError("report CSV row needs 16 fields");
  VerificationReport r;
  r.n = std::stoi(f[0]);
  r.weight = f[1];
  r.monotonicity = parse_monotonicity(f[2]);
  r.graphs_scanned = std::stoull(f[3]);
  std::istringstream shards(f[4]);
  for (int s; shards >> s;) r.shards.push_back(s);
  r.shard_count = std::stoi(f[5]);
  const std::string name = "W_h[" + r.weight + "]";
  if (!f[6].empty()) r.min_value = value_from_strings(name, f[6], f[7]);
  if (!f[8].empty()) r.max_value = value_from_strings(name, f[8], f[9]);
  r.argmin_forms = split_forms(f[10]);
  r.argmax_forms = split_forms(f[11]);
  r.claims = {parse_claim_status(f[12]), parse_claim_status(f[13]), parse_claim_status(f[14]),
              parse_claim_status(f[15])};
  return r;
}

std::string to_csv(const std::vector<DominanceCheck>& checks) {
  std::string out(kDominanceCsvHeader);
  out += '\n';
  for (const auto& c : checks) {
    out += std::to_string(c.r) + "," + std::to_string(c.n) + "," + csv_field(c.f3.value_string()) + "," +
           csv_field(c.fr.value_string()) + "," + std::string(to_string(c.f3.mode())) + "," +
           (c.pass ? "pass" : "fail") + "\n";
  }
  return out;
}

}  // namespace hwiener
