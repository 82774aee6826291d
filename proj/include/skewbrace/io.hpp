#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "skewbrace/brace.hpp"
#include "skewbrace/error.hpp"
#include "skewbrace/isoclinism.hpp"

namespace skewbrace {

// ---- brace file format -------------------------------------------------------
//
//   skewbrace v1
//   order N
//   add:
//   <N rows of N space-separated 0-based indices>
//   circ:
//   <N rows>
//
// Lines starting with '#' and blank lines are ignored.  The shared
// identity must be element 0 in both tables; files violating that are
// rejected at parse time with a relabeling hint.

namespace detail {

inline std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

inline std::vector<Elem> parse_row(const std::string& line, int n, int row) {
  std::istringstream ss(line);
  std::vector<Elem> out;
  long v = 0;
  while (ss >> v) {
    if (v < 0 || v >= n)
      fail(Errc::parse_error, "entry " + std::to_string(v) + " out of range in row " + std::to_string(row));
    out.push_back(static_cast<Elem>(v));
  }
  if (!ss.eof())
    fail(Errc::parse_error, "non-numeric token in row " + std::to_string(row));
  if (static_cast<int>(out.size()) != n)
    fail(Errc::parse_error, "row " + std::to_string(row) + " has " + std::to_string(out.size()) +
                                " entries, expected " + std::to_string(n));
  return out;
}

// The format rule check: if the table has a two-sided identity anywhere
// but 0, the file is malformed (validation handles the no-identity case).
inline void check_identity_is_zero(const CayleyTable& t, const std::string& which) {
  for (Elem e = 0; e < t.n; ++e) {
    bool ident = true;
    for (Elem x = 0; x < t.n && ident; ++x) ident = t.at(e, x) == x && t.at(x, e) == x;
    if (ident) {
      if (e != 0)
        fail(Errc::parse_error, which + " identity is element " + std::to_string(e) +
                                    "; relabel the file so it becomes element 0 (swap indices 0 and " +
                                    std::to_string(e) + ")");
      return;
    }
  }
}

}  // namespace detail

inline std::pair<CayleyTable, CayleyTable> read_brace_tables(std::istream& in) {
  std::vector<std::string> lines = detail::content_lines(in);
  size_t at = 0;
  auto next = [&]() -> const std::string& {
    if (at >= lines.size()) fail(Errc::parse_error, "unexpected end of file");
    return lines[at++];
  };
  if (next() != "skewbrace v1") fail(Errc::parse_error, "missing 'skewbrace v1' header");
  std::istringstream order_line(next());
  std::string kw;
  int n = 0;
  if (!(order_line >> kw >> n) || kw != "order" || n <= 0)
    fail(Errc::parse_error, "expected 'order N' after the header");
  auto read_table = [&](const std::string& marker) {
    if (next() != marker) fail(Errc::parse_error, "expected '" + marker + "'");
    std::vector<Elem> cells;
    cells.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) {
      std::vector<Elem> row = detail::parse_row(next(), n, r);
      cells.insert(cells.end(), row.begin(), row.end());
    }
    return CayleyTable(n, std::move(cells));
  };
  CayleyTable add = read_table("add:");
  CayleyTable circ = read_table("circ:");
  if (at != lines.size()) fail(Errc::parse_error, "trailing content after the circ table");
  detail::check_identity_is_zero(add, "additive");
  detail::check_identity_is_zero(circ, "multiplicative");
  return {std::move(add), std::move(circ)};
}

inline SkewBrace read_brace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open " + path);
  auto [add, circ] = read_brace_tables(in);
  return SkewBrace::validate(std::move(add), std::move(circ));
}

inline void write_brace_file(std::ostream& out, const SkewBrace& b) {
  const int n = b.order();
  out << "skewbrace v1\n" << "order " << n << "\n";
  auto table = [&](const char* marker, const CayleyTable& t) {
    out << marker << "\n";
    for (Elem i = 0; i < n; ++i) {
      for (Elem j = 0; j < n; ++j) {
        if (j) out << ' ';
        out << t.at(i, j);
      }
      out << '\n';
    }
  };
  table("add:", b.add_table());
  table("circ:", b.circ_table());
}

inline std::string format_brace_file(const SkewBrace& b) {
  std::ostringstream out;
  write_brace_file(out, b);
  return out.str();
}

// ---- digests -----------------------------------------------------------------

// FNV-1a over order and both tables, little-endian 32-bit cells; stable
// across platforms and runs.
inline uint64_t table_digest(const SkewBrace& b) {
  uint64_t h = 14695981039346656037ull;
  auto mix = [&](uint32_t v) {
    for (int k = 0; k < 4; ++k) {
      h ^= (v >> (8 * k)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<uint32_t>(b.order()));
  for (Elem v : b.add_table().cells) mix(static_cast<uint32_t>(v));
  for (Elem v : b.circ_table().cells) mix(static_cast<uint32_t>(v));
  return h;
}

inline uint64_t gamma_digest(const SkewBrace& b) {
  uint64_t h = 14695981039346656037ull;
  auto mix = [&](uint32_t v) {
    for (int k = 0; k < 4; ++k) {
      h ^= (v >> (8 * k)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<uint32_t>(b.order()));
  for (Elem x = 0; x < b.order(); ++x)
    for (Elem v : b.gamma(x).images()) mix(static_cast<uint32_t>(v));
  return h;
}

inline std::string digest_hex(uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return s;
}

// ---- report serialization ----------------------------------------------------

inline nlohmann::json to_json(const PredicateTriple& p) {
  return {{"biskew", p.biskew}, {"lambda_homomorphic", p.lambda_homomorphic}, {"inner", p.inner}};
}

inline nlohmann::json to_json(const Isoclinism& pair) {
  return {{"xi", pair.xi.images()}, {"theta", pair.theta.images()}};
}

inline nlohmann::json to_json(const TheoremReport& r, const std::vector<std::string>& labels) {
  nlohmann::json classes = nlohmann::json::array();
  for (const ClassReport& c : r.classes) {
    nlohmann::json members = nlohmann::json::array();
    for (int m : c.members) members.push_back(labels[static_cast<size_t>(m)]);
    nlohmann::json witnesses = nlohmann::json::array();
    for (const WitnessRecord& w : c.witnesses) {
      nlohmann::json j = to_json(w.pair);
      j["from"] = labels[static_cast<size_t>(w.from)];
      j["to"] = labels[static_cast<size_t>(w.to)];
      witnesses.push_back(std::move(j));
    }
    classes.push_back({{"id", c.id},
                       {"members", std::move(members)},
                       {"predicates", to_json(c.preds)},
                       {"witnesses", std::move(witnesses)}});
  }
  nlohmann::json additive_only = nlohmann::json::array();
  for (const auto& p : r.additive_only_pairs)
    additive_only.push_back({labels[static_cast<size_t>(p.first)], labels[static_cast<size_t>(p.second)]});
  return {{"classes", std::move(classes)},
          {"violations", r.violations},
          {"additive_only_pairs", std::move(additive_only)},
          {"remark_pairs_checked", r.remark_pairs_checked},
          {"expansion_scans", r.expansion_scans},
          {"ok", r.ok()}};
}

}  // namespace skewbrace
