#include "tarep/model.hpp"

#include <algorithm>

namespace tarep {

Property Property::constant(bool value) {
  Property p;
  p.kind = value ? Kind::True : Kind::False;
  return p;
}

Property Property::atom(ClockConstraint c) {
  Property p;
  p.kind = Kind::Clock;
  p.clock = std::move(c);
  return p;
}

Property Property::at(AutomatonId a, LocationId l) {
  Property p;
  p.kind = Kind::At;
  p.automaton = a;
  p.location = l;
  return p;
}

Property Property::negation(Property inner) {
  Property p;
  p.kind = Kind::Not;
  p.children.push_back(std::move(inner));
  return p;
}

Property Property::conjunction(std::vector<Property> ps) {
  Property p;
  p.kind = Kind::And;
  p.children = std::move(ps);
  return p;
}

Property Property::disjunction(std::vector<Property> ps) {
  Property p;
  p.kind = Kind::Or;
  p.children = std::move(ps);
  return p;
}

namespace {

ClockDnf dnf_and(const ClockDnf& a, const ClockDnf& b) {
  ClockDnf out;
  for (const auto& x : a)
    for (const auto& y : b) {
      auto conj = x;
      conj.insert(conj.end(), y.begin(), y.end());
      out.push_back(std::move(conj));
    }
  return out;
}

// DNF of `p` (positive) or of its negation, with location predicates folded
// against the fixed location vector. {} is false, {{}} is true.
ClockDnf to_dnf(const Property& p, const LocationVector& locs, bool positive) {
  using K = Property::Kind;
  switch (p.kind) {
    case K::True: return positive ? ClockDnf{{}} : ClockDnf{};
    case K::False: return positive ? ClockDnf{} : ClockDnf{{}};
    case K::At: {
      bool holds = p.automaton.index() < locs.size() && locs[p.automaton.index()] == p.location;
      return holds == positive ? ClockDnf{{}} : ClockDnf{};
    }
    case K::Clock: {
      if (positive) return {{p.clock}};
      ClockDnf out;
      for (auto op : negate(p.clock.op)) out.push_back({ClockConstraint{p.clock.clock, op, p.clock.bound}});
      return out;
    }
    case K::Not: return to_dnf(p.children.at(0), locs, !positive);
    case K::And:
    case K::Or: {
      bool conj = (p.kind == K::And) == positive;
      if (conj) {
        ClockDnf acc{{}};
        for (const auto& c : p.children) {
          acc = dnf_and(acc, to_dnf(c, locs, positive));
          if (acc.empty()) break;
        }
        return acc;
      }
      ClockDnf acc;
      for (const auto& c : p.children) {
        auto d = to_dnf(c, locs, positive);
        acc.insert(acc.end(), d.begin(), d.end());
      }
      return acc;
    }
  }
  return {};
}

int precedence(Property::Kind k) {
  switch (k) {
    case Property::Kind::Or: return 1;
    case Property::Kind::And: return 2;
    default: return 3;
  }
}

void print(const Network& net, const Property& p, std::string& out) {
  using K = Property::Kind;
  switch (p.kind) {
    case K::True: out += "true"; return;
    case K::False: out += "false"; return;
    case K::Clock: out += describe(net, p.clock); return;
    case K::At: {
      const auto& ta = net.automata.at(p.automaton.index());
      out += "@" + ta.name + "." + ta.locations.at(p.location.index()).name;
      return;
    }
    case K::Not: {
      out += "!";
      const auto& c = p.children.at(0);
      bool paren = c.kind == K::And || c.kind == K::Or || c.kind == K::Clock;
      if (paren) out += "(";
      print(net, c, out);
      if (paren) out += ")";
      return;
    }
    case K::And:
    case K::Or: {
      if (p.children.empty()) {
        out += p.kind == K::And ? "true" : "false";
        return;
      }
      for (std::size_t i = 0; i < p.children.size(); ++i) {
        if (i) out += p.kind == K::And ? " && " : " || ";
        const auto& c = p.children[i];
        bool paren = precedence(c.kind) <= precedence(p.kind) && (c.kind == K::And || c.kind == K::Or);
        if (paren) out += "(";
        print(net, c, out);
        if (paren) out += ")";
      }
      return;
    }
  }
}

}  // namespace

ClockDnf negated_dnf(const Property& prop, const LocationVector& locs) { return to_dnf(prop, locs, false); }

ClockDnf positive_dnf(const Property& prop, const LocationVector& locs) { return to_dnf(prop, locs, true); }

std::string to_string(const Network& net, const Property& prop) {
  std::string out;
  print(net, prop, out);
  return out;
}

Rational max_constant(const Property& prop) {
  Rational m = prop.kind == Property::Kind::Clock ? prop.clock.bound : Rational(0);
  for (const auto& c : prop.children) m = std::max(m, max_constant(c));
  return m;
}

}  // namespace tarep
