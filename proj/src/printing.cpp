#include "semicong/printing.hpp"

#include <sstream>

namespace semicong {

std::string print_congruence(const Congruence& c, const Semiring& owner) {
  std::ostringstream out;
  for (const auto& cls : c.classes()) {
    out << '{';
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) out << ' ';
      out << owner.elem_name(cls[i]);
    }
    out << '}';
  }
  return out.str();
}

std::string print_relation(const Relation& r, const Semiring& owner) {
  std::ostringstream out;
  bool first = true;
  for (const Pair& p : r.pairs()) {
    if (p.a == p.b) continue;
    if (!first) out << ", ";
    out << owner.elem_name(p.a) << '~' << owner.elem_name(p.b);
    first = false;
  }
  return out.str();
}

namespace {
const char* yn(bool b) { return b ? "true" : "false"; }
}  // namespace

std::string print_classification(const Classification& c) {
  std::ostringstream out;
  out << "proper=" << yn(c.proper) << '\n'
      << "prime=" << yn(c.prime) << '\n'
      << "semi_prime=" << yn(c.semi_prime) << '\n'
      << "maximal=" << yn(c.maximal) << '\n'
      << "semi_maximal=" << yn(c.semi_maximal) << '\n'
      << "radical=" << yn(c.radical) << '\n'
      << "quasi_radical=" << yn(c.quasi_radical) << '\n'
      << "plus_saturated=" << yn(c.plus_saturated) << '\n';
  return out.str();
}

std::string print_semiring_flags(const SemiringFlags& f) {
  std::ostringstream out;
  out << "semidomain=" << yn(f.semidomain) << '\n'
      << "semifield=" << yn(f.semifield) << '\n'
      << "additive_annihilation=" << yn(f.additive_annihilation) << '\n'
      << "additively_idempotent=" << yn(f.additively_idempotent) << '\n';
  return out.str();
}

std::string print_semiring_block(const Semiring& s, const std::string& name) {
  std::ostringstream out;
  out << "semiring " << name << '\n' << "  elements";
  for (int i = 0; i < s.n; ++i) out << ' ' << s.elem_name(i);
  out << '\n';
  out << "  zero " << s.elem_name(s.zero) << '\n';
  out << "  one " << s.elem_name(s.one) << '\n';
  for (int a = 0; a < s.n; ++a)
    for (int b = a; b < s.n; ++b)
      out << "  add " << s.elem_name(a) << ' ' << s.elem_name(b) << " = "
          << s.elem_name(s.add(a, b)) << '\n';
  for (int a = 0; a < s.n; ++a)
    for (int b = a; b < s.n; ++b)
      out << "  mul " << s.elem_name(a) << ' ' << s.elem_name(b) << " = "
          << s.elem_name(s.mul(a, b)) << '\n';
  out << "end\n";
  return out.str();
}

std::string print_polynomial(const Polynomial& f, const Semiring& coeff) {
  if (f.terms.empty()) return coeff.elem_name(coeff.zero);
  std::ostringstream out;
  bool first = true;
  // descending graded-lex
  for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
    const auto& [mon, c] = *it;
    if (!first) out << " + ";
    first = false;
    const bool constant = monomial_degree(mon) == 0;
    const bool unit = c == coeff.one;
    if (constant || !unit) out << coeff.elem_name(c);
    bool emitted = !constant && !unit;
    for (int i = 0; i < f.num_vars; ++i) {
      if (mon[i] == 0) continue;
      if (emitted || !unit) out << '*';
      out << 'x' << (i + 1);
      if (mon[i] > 1) out << '^' << mon[i];
      emitted = true;
    }
  }
  return out.str();
}

std::string print_point(const std::vector<int>& coords, const Semiring& b) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out << ' ';
    out << b.elem_name(coords[i]);
  }
  out << ')';
  return out.str();
}

std::string print_variety(const Variety& y, const Semiring& b) {
  // tuples sorted lexicographically by coordinates
  std::vector<std::vector<int>> tuples;
  for (int r : y.points) {
    std::vector<int> coords(y.arity);
    int rr = r;
    for (int i = 0; i < y.arity; ++i) {
      coords[i] = rr % y.base;
      rr /= y.base;
    }
    tuples.push_back(std::move(coords));
  }
  std::sort(tuples.begin(), tuples.end());
  std::ostringstream out;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (i) out << ' ';
    out << print_point(tuples[i], b);
  }
  return out.str();
}

std::string print_axiom_report(const AxiomReport& rep) {
  std::ostringstream out;
  out << "passed=" << yn(rep.passed) << '\n';
  for (const AxiomViolation& v : rep.violations) {
    out << "violation axiom=" << v.axiom << " witness=(";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) out << ' ';
      out << v.witness[i];
    }
    out << ")\n";
  }
  return out.str();
}

}  // namespace semicong
