#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "blocks.hpp"
#include "charring.hpp"
#include "g0reps.hpp"
#include "superalgebra.hpp"
#include "weights.hpp"

namespace cartan {

using json = nlohmann::json;

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) { out.push_back(cur); cur.clear(); }
    else cur += c;
  }
  out.push_back(cur);
  return out;
}

inline Rational parse_rational(const std::string& s) {
  try {
    return Rational::parse(trim(s));
  } catch (const std::exception& e) {
    throw ParseError("bad rational '" + s + "'");
  }
}

inline std::int64_t parse_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + s + "'");
  }
}

}  // namespace detail

// "p/q,...;delta=p/q"
inline Weight parse_weight(const AlgebraSpec& s, const std::string& text) {
  auto parts = detail::split(text, ';');
  if (parts.size() > 2) throw ParseError("too many ';' in weight '" + text + "'");
  std::vector<Rational> eps;
  if (!detail::trim(parts[0]).empty())
    for (auto& p : detail::split(parts[0], ',')) eps.push_back(detail::parse_rational(p));
  Rational d = 0;
  if (parts.size() == 2) {
    std::string tail = detail::trim(parts[1]);
    if (tail.rfind("delta=", 0) != 0) throw ParseError("expected 'delta=' in weight '" + text + "'");
    if (!s.has_delta()) throw ParseError(s.name() + " weights carry no delta coordinate");
    d = detail::parse_rational(tail.substr(6));
  }
  if (static_cast<int>(eps.size()) != s.eps_dim())
    throw ParseError("expected " + std::to_string(s.eps_dim()) + " eps coordinates in '" + text + "'");
  return Weight::from(s, eps, d);
}

// weight with optional "@dK,pB" suffix
inline SimpleParam parse_simple(const AlgebraSpec& s, const std::string& text) {
  auto at = text.find('@');
  SimpleParam p;
  p.weight = parse_weight(s, text.substr(0, at));
  if (at == std::string::npos) return p;
  for (auto& f : detail::split(text.substr(at + 1), ',')) {
    std::string t = detail::trim(f);
    if (t.size() < 2) throw ParseError("bad suffix field '" + t + "'");
    if (t[0] == 'd') p.depth = detail::parse_int(t.substr(1));
    else if (t[0] == 'p') p.parity = mod2(detail::parse_int(t.substr(1)));
    else throw ParseError("bad suffix field '" + t + "'");
  }
  return p;
}

inline std::string format_weight(const Weight& w) {
  std::string out;
  for (int i = 0; i < w.eps_dim(); ++i) {
    if (i) out += ",";
    out += w.eps(i).str();
  }
  if (w.has_delta()) out += ";delta=" + w.delta().str();
  return out;
}

inline json to_json(const Weight& w) {
  json a = json::array();
  for (auto& c : w.coords()) a.push_back(c.str());
  return a;
}

inline Weight weight_from_json(const AlgebraSpec& s, const json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != s.coord_dim()) throw ParseError("bad weight array");
  Weight w(s);
  for (int i = 0; i < s.coord_dim(); ++i) w[i] = detail::parse_rational(j[i].get<std::string>());
  return w;
}

inline json to_json(const SimpleParam& p) {
  return {{"weight", to_json(p.weight)}, {"depth", p.depth}, {"parity", p.parity}};
}

inline json to_json(const FormalCharacter& f) {
  json a = json::array();
  for (auto& [w, c] : f.sorted()) a.push_back({{"weight", to_json(w)}, {"coeff", c}});
  return a;
}

inline json to_json(const TruncatedSeries& t) {
  json win = json::array({t.lo().str(), t.hi() ? json(t.hi()->str()) : json(nullptr)});
  return {{"window", win}, {"terms", to_json(t.character())}};
}

inline json to_json(const FlagTable& t) {
  json a = json::array();
  for (auto& e : t.entries)
    a.push_back({{"weight", to_json(e.weight)},
                 {"mult", e.mult},
                 {"depth_offset", e.depth_offset},
                 {"parity_offset", e.parity_offset}});
  return a;
}

inline json to_json(const BlockKey& k) {
  json j = {{"c", k.c.str()}, {"parity_anchor", k.parity_anchor}, {"depth_anchor", k.depth_anchor}};
  if (k.d) j["d"] = k.d->str();
  return j;
}

inline json roots_json(const AlgebraSpec& s) {
  RootDatum rd = root_system(s);
  auto tagged = [](const std::set<Weight>& set) {
    json a = json::array();
    for (auto& w : set) a.push_back(to_json(w));
    return a;
  };
  json roots = json::array();
  for (auto& w : rd.all_roots) {
    json e = {{"weight", to_json(w)}};
    if (rd.odd_ge1.count(w)) e["parity"] = 1;
    else if (rd.even_ge1.count(w)) e["parity"] = 0;
    roots.push_back(e);
  }
  json basis = json::array();
  for (auto& b : build_algebra(s).basis)
    basis.push_back({{"label", b.label}, {"degree", b.degree}, {"parity", b.parity}, {"weight", to_json(b.weight)}});
  return {{"algebra", s.name()},
          {"dimension", basis.size()},
          {"roots", roots},
          {"positive_g0", tagged(rd.positive_g0)},
          {"even_ge1", tagged(rd.even_ge1)},
          {"odd_ge1", tagged(rd.odd_ge1)},
          {"basis", basis}};
}

}  // namespace cartan
