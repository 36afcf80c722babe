#include "fsplit/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "fsplit/errors.hpp"
#include "fsplit/parse.hpp"

namespace fsplit {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::size_t skip_space(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long long parse_int(const Line& line, std::string_view token, std::size_t col) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line.number, col + 1, "expected an integer, got '" + std::string(token) + "'");
  return v;
}

std::vector<std::pair<std::string_view, std::size_t>> split_commas(std::string_view s, std::size_t offset) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] != ',') continue;
    std::string_view piece = s.substr(start, i - start);
    std::size_t lead = skip_space(piece, 0);
    out.emplace_back(trim_right(piece.substr(lead)), offset + start + lead);
    start = i + 1;
  }
  return out;
}

bool valid_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

/// Splits "<keyword> <rest>"; returns keyword and the column where rest begins.
std::pair<std::string_view, std::size_t> keyword(std::string_view s) {
  std::size_t i = skip_space(s, 0);
  std::size_t j = i;
  while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
  return {s.substr(i, j - i), skip_space(s, j)};
}

/// "name = value" with the columns of both parts.
struct Assignment {
  std::string_view name;
  std::size_t name_col;
  std::string_view value;
  std::size_t value_col;
};

Assignment assignment(const Line& line, std::size_t from) {
  std::string_view s = line.text;
  std::size_t eq = s.find('=', from);
  if (eq == std::string_view::npos) throw ParseError(line.number, from + 1, "expected '='");
  std::string_view name = trim_right(s.substr(from, eq - from));
  std::size_t vcol = skip_space(s, eq + 1);
  return {name, from, trim_right(s.substr(vcol)), vcol};
}

}  // namespace

const ScenarioIdeal* Scenario::find_ideal(std::string_view name) const {
  for (const auto& I : ideals)
    if (I.name == name) return &I;
  return nullptr;
}

bool operator==(const Scenario& a, const Scenario& b) {
  if (!a.ring || !b.ring) return a.ring == b.ring;
  return *a.ring == *b.ring && a.standard == b.standard && a.splitting == b.splitting &&
         a.ideals == b.ideals && a.params == b.params;
}

const std::vector<std::string>& known_params() {
  static const std::vector<std::string> keys{"degree-bound", "N",           "hilbert",
                                             "window",       "exclude-zero", "exclude-unit"};
  return keys;
}

Scenario parse_scenario(std::string_view text) {
  std::vector<Line> lines;
  {
    std::size_t number = 1, start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i < text.size() && text[i] != '\n') continue;
      std::string raw(text.substr(start, i - start));
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (raw.find_first_not_of(" \t") != std::string::npos) lines.push_back({number, raw});
      ++number;
      start = i + 1;
    }
  }

  // Pass 1: ring and weights.
  std::optional<Line> ring_line;
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  long long max_degree = Ring::kDefaultMaxDegree;
  std::vector<std::vector<int>> weights;
  std::size_t weights_line = 0;
  for (const auto& line : lines) {
    auto [kw, rest] = keyword(line.text);
    if (kw == "ring") {
      if (ring_line) throw ParseError(line.number, 1, "duplicate ring declaration");
      ring_line = line;
      std::string_view s = line.text;
      std::size_t i = rest;
      bool have_p = false, have_vars = false;
      while (i < s.size()) {
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        std::string_view tok = s.substr(i, j - i);
        std::size_t eq = tok.find('=');
        if (eq == std::string_view::npos)
          throw ParseError(line.number, i + 1, "expected key=value in ring declaration");
        std::string_view key = tok.substr(0, eq), value = tok.substr(eq + 1);
        std::size_t vcol = i + eq + 1;
        if (key == "p") {
          long long v = parse_int(line, value, vcol);
          if (v < 2 || v >= (1ll << 31) || !is_prime(static_cast<std::uint64_t>(v)))
            throw ParseError(line.number, vcol + 1, "p must be a prime below 2^31");
          p = static_cast<std::uint32_t>(v);
          have_p = true;
        } else if (key == "vars") {
          for (auto [name, col] : split_commas(value, vcol)) {
            if (!valid_name(name)) throw ParseError(line.number, col + 1, "invalid variable name");
            if (std::find(vars.begin(), vars.end(), name) != vars.end())
              throw ParseError(line.number, col + 1, "duplicate variable '" + std::string(name) + "'");
            vars.emplace_back(name);
          }
          have_vars = true;
        } else if (key == "max-degree") {
          max_degree = parse_int(line, value, vcol);
          if (max_degree < 1) throw ParseError(line.number, vcol + 1, "max-degree must be positive");
        } else {
          throw ParseError(line.number, i + 1, "unknown ring attribute '" + std::string(key) + "'");
        }
        i = skip_space(s, j);
      }
      if (!have_p) throw ParseError(line.number, 1, "ring declaration needs p=<prime>");
      if (!have_vars) throw ParseError(line.number, 1, "ring declaration needs vars=<names>");
    } else if (kw == "weights") {
      std::vector<int> row;
      for (auto [tok, col] : split_commas(std::string_view(line.text).substr(rest), rest))
        row.push_back(static_cast<int>(parse_int(line, tok, col)));
      if (weights.empty()) weights_line = line.number;
      weights.push_back(std::move(row));
    }
  }
  if (!ring_line) throw ParseError(lines.empty() ? 1 : lines.front().number, 1, "missing ring declaration");

  Scenario sc;
  {
    std::optional<Grading> grading;
    if (!weights.empty()) {
      for (const auto& row : weights)
        if (row.size() != vars.size())
          throw ParseError(weights_line, 1, "weights row length does not match the variable count");
      try {
        grading = Grading(weights);
      } catch (const PreconditionError& e) {
        throw ParseError(weights_line, 1, e.what());
      }
    }
    sc.ring = Ring::make(p, vars, grading, max_degree);
  }

  // Pass 2: splitting, ideals, params.
  bool have_splitting = false;
  for (const auto& line : lines) {
    auto [kw, rest] = keyword(line.text);
    if (kw == "ring" || kw == "weights") continue;
    if (kw == "splitting") {
      if (have_splitting) throw ParseError(line.number, 1, "duplicate splitting declaration");
      have_splitting = true;
      std::string_view body = trim_right(std::string_view(line.text).substr(rest));
      if (body == "standard") {
        sc.standard = true;
        sc.splitting = standard_splitting(sc.ring);
        continue;
      }
      Assignment a = assignment(line, rest);
      if (a.name != "g") throw ParseError(line.number, rest + 1, "expected 'standard' or 'g = <polynomial>'");
      Polynomial g = parse_polynomial(sc.ring, a.value, line.number, a.value_col);
      try {
        sc.splitting = Splitting(std::move(g));
      } catch (const NotASplitting& e) {
        throw ParseError(line.number, a.value_col + 1, e.what());
      }
    } else if (kw == "ideal") {
      Assignment a = assignment(line, rest);
      if (!valid_name(a.name)) throw ParseError(line.number, a.name_col + 1, "invalid ideal name");
      if (sc.find_ideal(a.name))
        throw ParseError(line.number, a.name_col + 1, "duplicate ideal '" + std::string(a.name) + "'");
      sc.ideals.push_back({std::string(a.name), parse_polynomial_list(sc.ring, a.value, line.number, a.value_col)});
    } else if (kw == "param") {
      Assignment a = assignment(line, rest);
      const auto& keys = known_params();
      if (std::find(keys.begin(), keys.end(), a.name) == keys.end())
        throw ParseError(line.number, a.name_col + 1, "unknown parameter '" + std::string(a.name) + "'");
      sc.params[std::string(a.name)] = std::string(a.value);
    } else {
      throw ParseError(line.number, skip_space(line.text, 0) + 1,
                       "unknown declaration '" + std::string(kw) + "'");
    }
  }
  return sc;
}

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream os;
  const Ring& R = *s.ring;
  os << "ring p=" << R.characteristic() << " vars=";
  for (std::size_t i = 0; i < R.arity(); ++i) os << (i ? "," : "") << R.variables()[i];
  if (R.max_degree() != Ring::kDefaultMaxDegree) os << " max-degree=" << R.max_degree();
  os << "\n";
  if (!(R.grading() == Grading::standard(R.arity()))) {
    for (const auto& row : R.grading().rows()) {
      os << "weights ";
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
      os << "\n";
    }
  }
  if (s.standard) os << "splitting standard\n";
  else if (s.splitting) os << "splitting g = " << s.splitting->premultiplier().to_string() << "\n";
  for (const auto& I : s.ideals) {
    os << "ideal " << I.name << " =";
    for (std::size_t k = 0; k < I.generators.size(); ++k)
      os << (k ? ", " : " ") << I.generators[k].to_string();
    os << "\n";
  }
  for (const auto& [k, v] : s.params) os << "param " << k << " = " << v << "\n";
  return os.str();
}

}  // namespace fsplit
