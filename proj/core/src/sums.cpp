#include "gra/sums.hpp"

#include <algorithm>

#include "gra/canonical.hpp"
#include "gra/error.hpp"

namespace gra {

void RawSum::append(const RawSum& other, const Rational& factor) {
  terms_.reserve(terms_.size() + other.size());
  for (const Term& t : other) terms_.push_back({t.coeff * factor, t.graph});
}

GraphSum GraphSum::of(const Graph& g, const Rational& coeff) {
  SumAccumulator acc;
  acc.add(coeff, g);
  return std::move(acc).finish();
}

Rational GraphSum::coefficient(const Graph& canonical) const {
  const auto it = entries_.find(canonical);
  return it == entries_.end() ? Rational(0) : it->second;
}

void SumAccumulator::add(const Rational& coeff, const Graph& g) {
  ++seen_;
  if (coeff == 0) return;
  CanonicalLabeling c = canonical_labeling(g);
  if (c.is_zero()) return;
  Rational& slot = acc_[std::move(c.canonical)];
  if (c.sign > 0)
    slot += coeff;
  else
    slot -= coeff;
}

void SumAccumulator::add(int sign, const Graph& g) {
  ++seen_;
  if (sign == 0) return;
  CanonicalLabeling c = canonical_labeling(g);
  if (c.is_zero()) return;
  Rational& slot = acc_[std::move(c.canonical)];
  if (c.sign * sign > 0)
    slot += 1;
  else
    slot -= 1;
}

void SumAccumulator::add(const GraphSum& s, const Rational& factor) {
  if (factor == 0) return;
  for (const auto& [g, c] : s) {
    ++seen_;
    acc_[g] += c * factor;
  }
}

GraphSum SumAccumulator::finish() && {
  GraphSum out;
  for (auto& [g, c] : acc_)
    if (c != 0) out.entries_.emplace(g, std::move(c));
  acc_.clear();
  return out;
}

GraphSum reduce(const RawSum& s) {
  SumAccumulator acc;
  for (const Term& t : s) acc.add(t.coeff, t.graph);
  return std::move(acc).finish();
}

RawSum embed(const GraphSum& s) {
  RawSum out;
  out.reserve(s.size());
  for (const auto& [g, c] : s) out.add(c, g);
  return out;
}

GraphSum add(const GraphSum& a, const GraphSum& b) {
  GraphSum out = a;
  for (const auto& [g, c] : b) {
    auto [it, inserted] = out.entries_.try_emplace(g, c);
    if (inserted) continue;
    it->second += c;
    if (it->second == 0) out.entries_.erase(it);
  }
  return out;
}

GraphSum scale(const Rational& c, const GraphSum& a) {
  GraphSum out;
  if (c == 0) return out;
  for (const auto& [g, x] : a) out.entries_.emplace(g, x * c);
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

RawSum parse_sum(std::string_view text) {
  RawSum out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (line == "0") continue;
    const auto star = line.find('*');
    if (star == std::string_view::npos)
      throw ParseError("sum line " + std::to_string(line_no) + ": expected \"<coefficient> * <graph>\"");
    Rational coeff;
    try {
      coeff = parse_rational(trim(line.substr(0, star)));
    } catch (const ParseError& e) {
      throw ParseError("sum line " + std::to_string(line_no) + ": " + e.what());
    }
    out.add(std::move(coeff), parse_graph(trim(line.substr(star + 1))));
  }
  return out;
}

std::string serialize_sum(const RawSum& s) {
  if (s.empty()) return "0\n";
  std::string out;
  for (const Term& t : s) {
    out += format_rational(t.coeff);
    out += " * ";
    out += serialize_graph(t.graph);
    out += '\n';
  }
  return out;
}

std::string serialize_sum(const GraphSum& s) { return serialize_sum(embed(s)); }

}  // namespace gra
