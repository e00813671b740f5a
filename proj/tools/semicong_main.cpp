// semicong: a workbench for congruences of finite commutative semirings and
// the varieties of polynomial pair systems over them.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "semicong/errors.hpp"
#include "semicong/function_semiring.hpp"
#include "semicong/geometry.hpp"
#include "semicong/printing.hpp"
#include "semicong/script.hpp"
#include "semicong/spectra.hpp"
#include "semicong/window.hpp"

using namespace semicong;

namespace {

constexpr const char* kUsage = R"(usage: semicong <command> [script|-] [flags]

commands:
  axioms            --semiring A
  classify-semiring --semiring A
  congruences       --semiring A
  generate          --relation R
  meet | join       --congruence r --congruence2 s
  radical           --congruence r
  nil               --semiring A
  classify          --congruence r
  spectrum          --semiring A --kind prime|semiprime|maximal|semimaximal
  vco               --semiring A --congruence r
  topology-spec     --semiring A
  quotient          --congruence r
  ideal-maps        --semiring A [--ideal "0 2 4"] [--congruence r]
  principal         --semiring A --pair "a b"
  variety           --system S --congruence r [--window N]
  closure           --system S --congruence r --points "p; q"
  irreducible       --system S --congruence r --points "p; q"
  vanishing         --system S --congruence r --points "p; q" [--check-pair "f = g"]
  star-union        --system S --system2 T --congruence r
  nullstellensatz   --system S --congruence r [--degree-cap D] [--coeff-cap C] [--window N]
  hom-count         --system S --congruence r [--window N]
  search maximal-nonprime --seed S --count N [--size-lo 2] [--size-hi 4]

flags: --max-size K (congruence enumeration bound, default 8)
       --window N   (natural-number window bound, default 50)
exit codes: 0 ok, 1 domain error, 2 parse/usage error
)";

struct Args {
  std::vector<std::string> positional;
  std::map<std::string, std::string> flags;

  bool has(const std::string& k) const { return flags.count(k) != 0; }
  std::string get(const std::string& k) const {
    const auto it = flags.find(k);
    if (it == flags.end()) throw ParseError("missing required flag --" + k, 0, 0);
    return it->second;
  }
  std::string get_or(const std::string& k, const std::string& d) const {
    const auto it = flags.find(k);
    return it == flags.end() ? d : it->second;
  }
  long long get_int(const std::string& k, long long d) const {
    const auto it = flags.find(k);
    if (it == flags.end()) return d;
    try {
      return std::stoll(it->second);
    } catch (...) {
      throw ParseError("flag --" + k + " expects a number", 0, 0);
    }
  }
};

const std::set<std::string> kKnownFlags = {
    "semiring", "congruence", "congruence2", "relation", "system",   "system2",
    "kind",     "ideal",      "pair",        "points",   "window",   "degree-cap",
    "coeff-cap", "max-size",  "seed",        "count",    "size-lo",  "size-hi",
    "check-pair"};

Args parse_args(int argc, char** argv, int first) {
  Args a;
  for (int i = first; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--", 0) == 0) {
      const std::string key = arg.substr(2);
      if (!kKnownFlags.count(key)) throw ParseError("unknown flag " + arg, 0, 0);
      if (i + 1 >= argc) throw ParseError("flag " + arg + " needs a value", 0, 0);
      a.flags[key] = argv[++i];
    } else {
      a.positional.push_back(arg);
    }
  }
  return a;
}

std::string read_input(const Args& a) {
  if (a.positional.empty()) throw ParseError("missing script file (use - for stdin)", 0, 0);
  const std::string& path = a.positional[0];
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open script: " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

struct Session {
  WorkbenchScript ws;
  Args args;

  const Semiring& table_semiring(const std::string& name) const {
    const ScriptSemiring& s = ws.semiring(name);
    if (s.is_nat)
      throw DomainError("the nat pseudo-carrier supports only window-mode geometry commands");
    return s.table;
  }

  const Semiring& semiring_flag() const { return table_semiring(args.get("semiring")); }

  std::pair<const Semiring*, Congruence> congruence_flag(const std::string& flag) const {
    const ScriptCongruence& c = ws.congruence(args.get(flag));
    if (c.is_mod) throw DomainError("mod-p congruences live on the nat pseudo-carrier");
    return {&table_semiring(c.owner), c.value};
  }

  int max_size() const { return static_cast<int>(args.get_int("max-size", kDefaultEnumBound)); }
};

std::vector<int> parse_ideal_flag(const Semiring& a, const std::string& text) {
  std::istringstream in(text);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    const int id = a.elem_by_name(tok);
    if (id < 0) throw DomainError("unknown element '" + tok + "' in ideal");
    out.push_back(id);
  }
  return out;
}

// "--points" tuples: coordinates space-separated, points ';'-separated.
Variety parse_points_flag(const Semiring& b, int vars, const std::string& text) {
  std::vector<int> ranks;
  std::istringstream tuples(text);
  std::string tuple;
  while (std::getline(tuples, tuple, ';')) {
    if (tuple.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream coords(tuple);
    std::vector<int> point;
    std::string tok;
    while (coords >> tok) {
      const int id = b.elem_by_name(tok);
      if (id < 0) throw DomainError("unknown element '" + tok + "' in point");
      point.push_back(id);
    }
    if (static_cast<int>(point.size()) != vars)
      throw DomainError("point arity mismatch in --points");
    int rank = 0;
    for (int i = vars - 1; i >= 0; --i) rank = rank * b.n + point[i];
    ranks.push_back(rank);
  }
  return variety_from_points(vars, b.n, std::move(ranks));
}

struct GeometrySetup {
  EmbeddedSemiring ctx;
  PairSystem system;
  Congruence rho;
};

GeometrySetup geometry_setup(const Session& s, const std::string& system_flag) {
  const ScriptSystem& sys = s.ws.system(s.args.get(system_flag));
  if (sys.nat_coeffs) throw DomainError("this command does not run in window mode");
  const Semiring& coeff = s.table_semiring(sys.over);
  const Semiring& target = s.table_semiring(sys.in);
  const auto [owner, rho] = s.congruence_flag("congruence");
  if (!owner->same_structure(target)) throw DomainError("congruence owner mismatch");
  EmbeddedSemiring ctx =
      coeff.same_structure(target) ? identity_embedding(target) : find_embedding(coeff, target);
  return {std::move(ctx), sys.system, rho};
}

bool window_mode(const Session& s, const std::string& system_flag) {
  return s.ws.system(s.args.get(system_flag)).nat_coeffs;
}

window::Context window_setup(const Session& s) {
  const ScriptCongruence& c = s.ws.congruence(s.args.get("congruence"));
  if (!c.is_mod) throw DomainError("window mode needs a mod-p congruence");
  window::Context w;
  w.modulus = c.mod_p;
  w.bound = static_cast<std::uint64_t>(s.args.get_int("window", 50));
  return w;
}

void print_variety_lines(std::ostream& out, const Variety& y, const Semiring& b) {
  out << "count=" << y.points.size() << '\n';
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
  for (const auto& t : tuples) out << print_point(t, b) << '\n';
}

int run_command(const std::string& cmd, Session& s, std::ostream& out) {
  if (cmd == "axioms") {
    out << print_axiom_report(validate_axioms(s.semiring_flag()));
    return 0;
  }

  if (cmd == "classify-semiring") {
    out << print_semiring_flags(classify_semiring(s.semiring_flag()));
    return 0;
  }

  if (cmd == "congruences") {
    const Semiring& a = s.semiring_flag();
    for (const Congruence& rho : enumerate_congruences(a, s.max_size()))
      out << print_congruence(rho, a) << '\n';
    return 0;
  }

  if (cmd == "generate") {
    const ScriptRelation& r = s.ws.relation(s.args.get("relation"));
    const Semiring& a = s.table_semiring(r.owner);
    const Congruence c = generated_congruence(a, r.value);
    out << "classes=" << print_congruence(c, a) << '\n';
    out << "enlarged=" << (c.to_relation() != equivalence_closure(r.value) ? "true" : "false")
        << '\n';
    return 0;
  }

  if (cmd == "meet" || cmd == "join") {
    const auto [a1, rho] = s.congruence_flag("congruence");
    const auto [a2, sigma] = s.congruence_flag("congruence2");
    if (!a1->same_structure(*a2)) throw DomainError("congruence owner mismatch");
    const Congruence r = cmd == "meet" ? meet(*a1, rho, sigma) : join(*a1, rho, sigma);
    out << print_congruence(r, *a1) << '\n';
    return 0;
  }

  if (cmd == "radical") {
    const auto [a, rho] = s.congruence_flag("congruence");
    out << print_congruence(radical(*a, rho), *a) << '\n';
    return 0;
  }

  if (cmd == "nil") {
    const Semiring& a = s.semiring_flag();
    const NilReport rep = nil_relations(a);
    out << "r_nil_nontrivial=" << print_relation(rep.r_nil, a) << '\n';
    out << "rho_nil=" << print_congruence(rep.rho_nil, a) << '\n';
    out << "quasi_nil=" << print_congruence(rep.quasi_nil, a) << '\n';
    out << "reduced=" << (rep.reduced ? "true" : "false") << '\n';
    out << "strongly_reduced=" << (rep.strongly_reduced ? "true" : "false") << '\n';
    return 0;
  }

  if (cmd == "classify") {
    const auto [a, rho] = s.congruence_flag("congruence");
    out << "classes=" << print_congruence(rho, *a) << '\n';
    out << print_classification(classify(*a, rho));
    return 0;
  }

  if (cmd == "spectrum") {
    const Semiring& a = s.semiring_flag();
    const SpectrumKind kind = spectrum_kind_from_string(s.args.get_or("kind", "prime"));
    for (const Congruence& rho : spectrum(a, kind, s.max_size()))
      out << print_congruence(rho, a) << '\n';
    return 0;
  }

  if (cmd == "vco") {
    const Semiring& a = s.semiring_flag();
    const auto [owner, sigma] = s.congruence_flag("congruence");
    if (!owner->same_structure(a)) throw DomainError("congruence owner mismatch");
    for (const Congruence& rho : zariski_closed(a, sigma, s.max_size()))
      out << print_congruence(rho, a) << '\n';
    return 0;
  }

  if (cmd == "topology-spec") {
    const Semiring& a = s.semiring_flag();
    const auto primes = spectrum(a, SpectrumKind::prime, s.max_size());
    for (std::size_t i = 0; i < primes.size(); ++i)
      out << "prime[" << i << "]=" << print_congruence(primes[i], a) << '\n';
    std::set<std::vector<int>> closed;
    for (const Congruence& sigma : enumerate_congruences(a, s.max_size())) {
      std::vector<int> v;
      const auto vc = zariski_closed(a, sigma, s.max_size());
      for (const Congruence& rho : vc)
        for (std::size_t i = 0; i < primes.size(); ++i)
          if (primes[i] == rho) v.push_back(static_cast<int>(i));
      closed.insert(v);
    }
    for (const auto& v : closed) {
      out << "closed={";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
      out << "}\n";
    }
    return 0;
  }

  if (cmd == "quotient") {
    const auto [a, rho] = s.congruence_flag("congruence");
    const QuotientResult q = quotient(*a, rho);
    out << print_semiring_block(q.table, "quotient");
    out << "projection=";
    for (int e = 0; e < a->n; ++e)
      out << (e ? ", " : "") << a->elem_name(e) << "->" << q.table.elem_name(q.projection[e]);
    out << '\n';
    return 0;
  }

  if (cmd == "ideal-maps") {
    const Semiring& a = s.semiring_flag();
    if (!s.args.has("ideal") && !s.args.has("congruence"))
      throw ParseError("ideal-maps needs --ideal and/or --congruence", 0, 0);
    if (s.args.has("ideal")) {
      const std::vector<int> j = parse_ideal_flag(a, s.args.get("ideal"));
      if (!ideal_check(a, j)) throw DomainError("--ideal is not an ideal");
      const Congruence rho_j = ideal_to_congruence(a, j);
      out << "rho_J=" << print_congruence(rho_j, a) << '\n';
      out << "I_rho_J=";
      const auto back = congruence_to_ideal(a, rho_j);
      for (std::size_t i = 0; i < back.size(); ++i)
        out << (i ? " " : "") << a.elem_name(back[i]);
      out << '\n';
    }
    if (s.args.has("congruence")) {
      const auto [owner, sigma] = s.congruence_flag("congruence");
      if (!owner->same_structure(a)) throw DomainError("congruence owner mismatch");
      const auto ideal = congruence_to_ideal(a, sigma);
      out << "I_sigma=";
      for (std::size_t i = 0; i < ideal.size(); ++i)
        out << (i ? " " : "") << a.elem_name(ideal[i]);
      out << '\n';
      out << "rho_I_sigma=" << print_congruence(ideal_to_congruence(a, ideal), a) << '\n';
    }
    return 0;
  }

  if (cmd == "principal") {
    const Semiring& a = s.semiring_flag();
    std::istringstream in(s.args.get("pair"));
    std::string ta, tb;
    if (!(in >> ta >> tb)) throw ParseError("--pair expects two element names", 0, 0);
    const int ea = a.elem_by_name(ta), eb = a.elem_by_name(tb);
    if (ea < 0 || eb < 0) throw DomainError("unknown element in --pair");
    const auto [r, plus] = principal_congruence(a, ea, eb);
    out << "R=" << print_relation(r, a) << '\n';
    out << "R_plus=" << print_congruence(plus, a) << '\n';
    return 0;
  }

  if (cmd == "variety") {
    if (window_mode(s, "system")) {
      const window::Context w = window_setup(s);
      const ScriptSystem& sys = s.ws.system(s.args.get("system"));
      const auto pts = window::zero_set(w, sys.system);
      out << "window=" << w.bound << '\n';
      out << "count=" << pts.size() << '\n';
      for (const auto& p : pts) {
        out << '(';
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
        out << ")\n";
      }
      return 0;
    }
    const GeometrySetup g = geometry_setup(s, "system");
    print_variety_lines(out, zero_set(g.ctx, g.system, g.rho), g.ctx.target);
    return 0;
  }

  if (cmd == "closure" || cmd == "irreducible" || cmd == "vanishing") {
    const GeometrySetup g = geometry_setup(s, "system");
    const FunctionSemiring fs = function_semiring(g.ctx, g.system.arity);
    const Variety y = parse_points_flag(g.ctx.target, g.system.arity, s.args.get("points"));
    if (cmd == "closure") {
      print_variety_lines(out, closure_of(fs, y, g.rho), g.ctx.target);
      return 0;
    }
    if (cmd == "irreducible") {
      const Topology topo = materialize_topology(fs, g.rho);
      const bool irr = is_irreducible(y, topo);
      out << "irreducible=" << (irr ? "true" : "false") << '\n';
      if (irr)
        out << "vanishing_prime=" << (vanishing_is_prime(fs, y, g.rho) ? "true" : "false")
            << '\n';
      return 0;
    }
    const VanishingCongruence v = vanishing(fs, y, g.rho);
    out << "functions=" << v.num_functions << '\n';
    out << "classes=" << v.num_function_classes << '\n';
    if (s.args.has("check-pair")) {
      const auto pairs = parse_system(s.args.get("check-pair"), g.ctx.coeff, g.system.arity);
      for (const auto& p : pairs)
        out << "member=" << (v.contains(p) ? "true" : "false") << '\n';
    }
    return 0;
  }

  if (cmd == "star-union") {
    const GeometrySetup g = geometry_setup(s, "system");
    const ScriptSystem& sys2 = s.ws.system(s.args.get("system2"));
    if (sys2.nat_coeffs || sys2.system.arity != g.system.arity)
      throw DomainError("--system2 must match the first system's space");
    const StarUnionReport rep = star_union(g.ctx, g.system, sys2.system, g.rho);
    out << "z1=" << print_variety(rep.z1, g.ctx.target) << '\n';
    out << "z2=" << print_variety(rep.z2, g.ctx.target) << '\n';
    out << "z_star=" << print_variety(rep.z_star, g.ctx.target) << '\n';
    out << "prime=" << (rep.rho_prime ? "true" : "false") << '\n';
    out << "equal=" << (rep.equal ? "true" : "false") << '\n';
    return 0;
  }

  if (cmd == "nullstellensatz") {
    const int cap = static_cast<int>(s.args.get_int("degree-cap", 3));
    NullstellensatzReport rep;
    if (window_mode(s, "system")) {
      const window::Context w = window_setup(s);
      const ScriptSystem& sys = s.ws.system(s.args.get("system"));
      const int coeff_cap =
          static_cast<int>(s.args.get_int("coeff-cap", static_cast<long long>(w.modulus) + 1));
      rep = window::nullstellensatz_check(w, sys.system, cap, coeff_cap);
    } else {
      const GeometrySetup g = geometry_setup(s, "system");
      const FunctionSemiring fs = function_semiring(g.ctx, g.system.arity);
      rep = nullstellensatz_check(fs, g.system, g.rho, cap);
    }
    out << "inclusion_holds=" << (rep.inclusion_holds ? "true" : "false") << '\n';
    out << "equality_holds=" << (rep.equality_holds ? "true" : "false") << '\n';
    out << "pairs_checked=" << rep.pairs_checked << '\n';
    out << "degree_cap=" << rep.degree_cap << '\n';
    if (rep.windowed) out << "window=" << rep.window << '\n';
    for (const std::string& w : rep.witnesses) out << "witness=" << w << '\n';
    return 0;
  }

  if (cmd == "hom-count") {
    HomCountReport rep;
    if (window_mode(s, "system")) {
      const window::Context w = window_setup(s);
      rep = window::hom_count(w, s.ws.system(s.args.get("system")).system);
    } else {
      const GeometrySetup g = geometry_setup(s, "system");
      rep = hom_count(g.ctx, g.system, g.rho);
    }
    out << "points=" << rep.points << '\n';
    out << "homs=" << rep.homs << '\n';
    if (rep.windowed) out << "window=" << rep.window << '\n';
    return 0;
  }

  throw ParseError("unknown command '" + cmd + "'", 0, 0);
}

int run_search(const Args& args, std::ostream& out) {
  if (!args.has("seed")) throw ParseError("search requires --seed", 0, 0);
  const MaximalSearchReport rep = search_maximal_nonprime(
      static_cast<int>(args.get_int("size-lo", 2)), static_cast<int>(args.get_int("size-hi", 4)),
      static_cast<std::uint64_t>(args.get_int("seed", 0)),
      static_cast<int>(args.get_int("count", 100)));
  out << "samples=" << rep.samples << '\n';
  out << "seed=" << rep.seed << '\n';
  out << "sizes=" << rep.size_lo << ".." << rep.size_hi << '\n';
  out << "maximal_seen=" << rep.maximal_seen << '\n';
  out << "nonprime_maximal=" << rep.nonprime.size() << '\n';
  out << "theorem_conflicts=" << rep.theorem_conflicts << '\n';
  out << "idempotent_conflicts=" << rep.idempotent_conflicts << '\n';
  for (const MaximalSearchWitness& w : rep.nonprime) {
    out << "witness_semiring:\n" << print_semiring_block(w.table, "W");
    out << "witness_congruence=" << print_congruence(w.maximal_congruence, w.table) << '\n';
    out << "witness_plus_saturated=" << (w.plus_saturated ? "true" : "false") << '\n';
    out << "witness_additively_idempotent=" << (w.additively_idempotent ? "true" : "false")
        << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  try {
    if (argc < 2) {
      std::cerr << kUsage;
      return 2;
    }
    std::string cmd = argv[1];
    int first = 2;
    if (cmd == "search") {
      if (argc < 3) {
        std::cerr << kUsage;
        return 2;
      }
      const std::string sub = argv[2];
      if (sub != "maximal-nonprime") throw ParseError("unknown search '" + sub + "'", 0, 0);
      return run_search(parse_args(argc, argv, 3), std::cout);
    }
    Session s;
    s.args = parse_args(argc, argv, first);
    s.ws = parse_script(read_input(s.args));
    for (const auto& c : s.ws.congruences)
      if (c.enlarged)
        std::cerr << "notice: congruence '" << c.name
                  << "': generation strictly enlarged the given pairs\n";
    return run_command(cmd, s, std::cout);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
