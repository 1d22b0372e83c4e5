#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "errors.hpp"

namespace analog {

using ActivityId = std::uint32_t;
using Trace = std::vector<ActivityId>;
using NamedTrace = std::vector<std::string>;

struct Variant {
  Trace trace;
  std::uint64_t count = 0;
};

/// Multiset of traces. Activities are interned per log in order of first
/// appearance; variants keep first-appearance order as well.
class EventLog {
 public:
  EventLog() = default;

  /// Adds `count` copies of the trace given by activity names.
  void add(const NamedTrace& names, std::uint64_t count = 1) {
    if (count == 0) throw input_error("variant count must be positive");
    Trace t;
    t.reserve(names.size());
    for (const auto& n : names) t.push_back(intern(n));
    add_ids(std::move(t), count);
  }

  const std::vector<std::string>& activities() const { return names_; }
  const std::vector<Variant>& variants() const { return variants_; }
  const std::string& name(ActivityId id) const { return names_.at(id); }
  std::size_t variety() const { return names_.size(); }
  std::size_t distinct() const { return variants_.size(); }
  bool empty() const { return variants_.empty(); }

  std::uint64_t trace_count() const {
    std::uint64_t s = 0;
    for (const auto& v : variants_) s = checked_add(s, v.count);
    return s;
  }

  NamedTrace named(const Trace& t) const {
    NamedTrace out;
    out.reserve(t.size());
    for (auto id : t) out.push_back(names_.at(id));
    return out;
  }

  /// Multiplicity of a trace given by names; 0 when absent.
  std::uint64_t count_of(const NamedTrace& names) const {
    Trace t;
    for (const auto& n : names) {
      auto it = ids_.find(n);
      if (it == ids_.end()) return 0;
      t.push_back(it->second);
    }
    auto it = index_.find(t);
    return it == index_.end() ? 0 : variants_[it->second].count;
  }

  /// Id of an activity name, if present.
  std::optional<ActivityId> id_of(const std::string& name) const {
    auto it = ids_.find(name);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  /// Insertion history as (variant index, count) pairs, one per add() call.
  /// Merged variants lose where their later copies were written; sequence
  /// measures such as Lempel-Ziv read the log in this order instead.
  const std::vector<std::pair<std::size_t, std::uint64_t>>& runs() const { return runs_; }

  /// Multiset sum; the left operand's runs come first.
  friend EventLog operator+(const EventLog& a, const EventLog& b) {
    EventLog r = a;
    for (const auto& [idx, c] : b.runs_) r.add(b.named(b.variants_[idx].trace), c);
    return r;
  }

  /// Multiset equality by activity names (interning order is irrelevant).
  friend bool operator==(const EventLog& a, const EventLog& b) {
    if (a.variants_.size() != b.variants_.size()) return false;
    for (const auto& v : a.variants_)
      if (b.count_of(a.named(v.trace)) != v.count) return false;
    return true;
  }

  static std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > UINT64_MAX - b) throw input_error("trace count overflows 64 bits");
    return a + b;
  }

 private:
  ActivityId intern(const std::string& n) {
    if (n.empty()) throw input_error("empty activity name");
    if (n.find_first_of(",;\n") != std::string::npos)
      throw input_error("activity name contains a reserved character: " + n);
    auto [it, fresh] = ids_.try_emplace(n, static_cast<ActivityId>(names_.size()));
    if (fresh) names_.push_back(n);
    return it->second;
  }

  void add_ids(Trace t, std::uint64_t count) {
    auto it = index_.find(t);
    if (it != index_.end()) {
      auto& c = variants_[it->second].count;
      c = checked_add(c, count);
      runs_.push_back({it->second, count});
      return;
    }
    index_.emplace(t, variants_.size());
    runs_.push_back({variants_.size(), count});
    variants_.push_back({std::move(t), count});
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, ActivityId> ids_;
  std::vector<Variant> variants_;
  std::map<Trace, std::size_t> index_;
  std::vector<std::pair<std::size_t, std::uint64_t>> runs_;
};

/// The strict multiset order: every count weakly smaller, logs unequal.
inline bool is_proper_sublog(const EventLog& l1, const EventLog& l2) {
  for (const auto& v : l1.variants())
    if (v.count > l2.count_of(l1.named(v.trace))) return false;
  return !(l1 == l2);
}

/// Set of activity names occurring in the log, in first-appearance order.
inline std::vector<std::string> alphabet(const EventLog& l) { return l.activities(); }

enum class DuplicateMode { accumulate, warn, reject };

struct ParseOptions {
  DuplicateMode duplicates = DuplicateMode::accumulate;
  std::ostream* warnings = &std::cerr;
};

namespace detail {
inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}
}  // namespace detail

/// Parses the line format `<count>;<a1>,<a2>,...`.
inline EventLog parse_log(std::string_view text, const ParseOptions& opt = {}) {
  EventLog log;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
    auto semi = line.find(';');
    if (semi == std::string::npos) throw input_error(where() + "missing ';' separator");
    std::string cnt = detail::trim(std::string_view(line).substr(0, semi));
    if (cnt.empty() || !std::all_of(cnt.begin(), cnt.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw input_error(where() + "count must be a positive integer");
    std::uint64_t count = 0;
    try {
      count = std::stoull(cnt);
    } catch (const std::exception&) {
      throw input_error(where() + "count out of range");
    }
    if (count == 0) throw input_error(where() + "count must be positive");
    NamedTrace trace;
    std::string body = line.substr(semi + 1);
    if (!detail::trim(body).empty()) {
      std::stringstream ss(body);
      std::string item;
      while (std::getline(ss, item, ',')) {
        auto name = detail::trim(item);
        if (name.empty()) throw input_error(where() + "empty activity name");
        trace.push_back(std::move(name));
      }
      if (body.back() == ',') throw input_error(where() + "empty activity name");
    }
    if (log.count_of(trace) > 0) {
      if (opt.duplicates == DuplicateMode::reject)
        throw input_error(where() + "duplicate variant");
      if (opt.duplicates == DuplicateMode::warn && opt.warnings)
        *opt.warnings << "warning: " << where() << "duplicate variant accumulated\n";
    }
    log.add(trace, count);
  }
  return log;
}

/// Parses `{"variants":[{"count":n,"trace":[...]}, ...]}`.
inline EventLog parse_log_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("invalid JSON log: ") + e.what());
  }
  if (!j.is_object() || !j.contains("variants") || !j["variants"].is_array())
    throw input_error("JSON log must contain a \"variants\" array");
  EventLog log;
  for (const auto& v : j["variants"]) {
    if (!v.is_object() || !v.contains("trace") || !v["trace"].is_array())
      throw input_error("each variant needs a \"trace\" array");
    std::uint64_t count = 1;
    if (v.contains("count")) {
      if (!v["count"].is_number_unsigned() || v["count"].get<std::uint64_t>() == 0)
        throw input_error("variant count must be a positive integer");
      count = v["count"].get<std::uint64_t>();
    }
    NamedTrace t;
    for (const auto& a : v["trace"]) {
      if (!a.is_string()) throw input_error("activity names must be strings");
      auto n = detail::trim(a.get<std::string>());
      t.push_back(n);
    }
    log.add(t, count);
  }
  return log;
}

/// Picks the JSON or line format by the first non-blank character.
inline EventLog parse_any_log(std::string_view text, const ParseOptions& opt = {}) {
  auto p = text.find_first_not_of(" \t\r\n");
  if (p != std::string_view::npos && text[p] == '{') return parse_log_json(text);
  return parse_log(text, opt);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline EventLog load_log(const std::string& path, const ParseOptions& opt = {}) {
  return parse_any_log(read_file(path), opt);
}

/// Writes one line per insertion run so that parsing restores the runs too.
inline std::string serialize_log(const EventLog& l) {
  std::string out;
  for (const auto& [idx, count] : l.runs()) {
    const auto& v = l.variants()[idx];
    out += std::to_string(count);
    out += ';';
    for (std::size_t i = 0; i < v.trace.size(); ++i) {
      if (i) out += ',';
      out += l.name(v.trace[i]);
    }
    out += '\n';
  }
  return out;
}

inline nlohmann::ordered_json log_to_json(const EventLog& l) {
  nlohmann::ordered_json vs = nlohmann::ordered_json::array();
  for (const auto& [idx, count] : l.runs())
    vs.push_back({{"count", count}, {"trace", l.named(l.variants()[idx].trace)}});
  return {{"variants", vs}};
}

/// Shorthand for single-character activities: "abc^50 abcd^30 acbd^20".
inline EventLog compact_log(std::string_view spec) {
  EventLog log;
  std::istringstream ss{std::string(spec)};
  std::string tok;
  while (ss >> tok) {
    std::uint64_t count = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      count = std::stoull(tok.substr(caret + 1));
      tok.resize(caret);
    }
    NamedTrace t;
    for (char c : tok) t.emplace_back(1, c);
    log.add(t, count);
  }
  return log;
}

}  // namespace analog
