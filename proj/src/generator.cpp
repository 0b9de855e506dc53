#include <algorithm>
#include <random>

#include "induction/exercises.hpp"

namespace induction {

namespace {

constexpr Connective kAll[] = {Connective::Neg, Connective::And, Connective::Or, Connective::Imp};

struct Builder {
  std::mt19937_64 rng;
  GeneratorParams params;

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(v.size()) - 1))];
  }

  LanguageSpec language() {
    std::vector<Connective> cs(std::begin(kAll), std::end(kAll));
    std::shuffle(cs.begin(), cs.end(), rng);
    auto n = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(std::min<std::size_t>(params.lang_size, 4))));
    cs.resize(n);
    std::sort(cs.begin(), cs.end());
    return LanguageSpec{{"p", "q"}, cs};
  }

  Formula random_template(const LanguageSpec& cod, const std::vector<std::string>& vars, int depth) {
    if (depth == 0 || coin(0.45)) return Formula::subst(pick(vars));
    Connective c = pick(cod.connectives);
    if (c == Connective::Neg) return Formula::neg(random_template(cod, vars, depth - 1));
    return Formula::bin(c, random_template(cod, vars, depth - 1), random_template(cod, vars, depth - 1));
  }

  TransformFunction transform(const LanguageSpec& lang) {
    TransformFunction g;
    g.name = "g";
    g.domain = lang;
    g.codomain = lang;
    if (!lang.has(Connective::Neg) && coin(0.3)) {
      g.codomain.connectives.insert(g.codomain.connectives.begin(), Connective::Neg);
    }
    g.atom_template = g.codomain.has(Connective::Neg) && coin(0.3) ? Formula::neg(Formula::subst("s"))
                                                                   : Formula::subst("s");
    for (Connective c : lang.connectives) {
      bool identity = coin(0.4);
      if (c == Connective::Neg)
        g.neg_template = identity ? Formula::neg(Formula::subst("s")) : random_template(g.codomain, {"s"}, 2);
      else
        g.binary_templates.insert_or_assign(c, identity ? Formula::bin(c, Formula::subst("s1"), Formula::subst("s2"))
                                                        : random_template(g.codomain, {"s1", "s2"}, 2));
    }
    return g;
  }

  CountingFunction counting(const std::string& name, const LanguageSpec& lang) {
    std::int64_t b = params.coeff_bound;
    CountingFunction f;
    f.name = name;
    f.atom_value = uniform(1, b);
    for (Connective c : lang.connectives) {
      if (c == Connective::Neg)
        f.neg = CountingFunction::NegCase{uniform(0, b), uniform(0, b)};
      else
        f.binary[c] = {uniform(0, b), uniform(0, b), uniform(0, b)};
    }
    return f;
  }

  bool within_bound(const CountingFunction& f) const {
    std::int64_t b = params.coeff_bound;
    auto ok = [b](std::int64_t v) { return v >= 0 && v <= b; };
    if (!ok(f.atom_value)) return false;
    if (f.neg && !(ok(f.neg->a) && ok(f.neg->b))) return false;
    for (const auto& [c, k] : f.binary)
      if (!(ok(k.a) && ok(k.b) && ok(k.c))) return false;
    return true;
  }

  std::optional<ExerciseSpec> attempt(std::uint64_t seed) {
    const std::int64_t B = params.coeff_bound;
    ExerciseSpec spec;
    spec.language = language();
    const LanguageSpec& lang = spec.language;
    bool use_g = coin(0.6);
    LanguageSpec fdomain = lang;
    if (use_g) {
      TransformFunction g = transform(lang);
      fdomain = g.codomain;
      spec.functions.add(std::move(g));
    }
    spec.functions.add(counting("f", fdomain));

    Expr phi = Expr::meta(kPhi);
    auto lhs_of = [&](const Expr& x) { return Expr::app("f", use_g ? Expr::app("g", x) : x); };
    Expr lhs = lhs_of(phi);
    std::string key_phi = print_expr(lhs);
    std::string key_psi = print_expr(lhs_of(Expr::meta(kPsi)));

    // Induced affine cases of f(g(.)).
    struct Induced {
      std::int64_t a, b, c;
    };
    std::int64_t atom_value = induced_form(spec.functions, lhs_of(Expr::atom("p"))).constant();
    if (induced_form(spec.functions, lhs_of(Expr::atom("q"))).constant() != atom_value) return std::nullopt;
    std::map<Connective, Induced> induced;
    for (Connective c : lang.connectives) {
      LinearForm form = induced_form(spec.functions, lhs_of(case_instance(c)));
      Induced ind{form.constant(), form.coefficient(key_phi), form.coefficient(key_psi)};
      std::size_t expected = (ind.b != 0) + (ind.c != 0);
      if (form.terms().size() != expected) return std::nullopt;
      induced[c] = ind;
    }

    std::size_t m = std::max<std::size_t>(1, params.term_count);
    std::vector<CountingFunction> hs(m);
    std::vector<std::int64_t> k(m);
    std::int64_t k0 = uniform(-B, B);
    for (std::size_t i = 0; i < m; ++i) {
      hs[i].name = "h" + std::to_string(i + 1);
      k[i] = uniform(1, B);
      if (i == 0) continue;
      hs[i].atom_value = uniform(0, B);
      for (Connective c : lang.connectives) {
        const Induced& ind = induced[c];
        if (c == Connective::Neg)
          hs[i].neg = CountingFunction::NegCase{uniform(0, B), ind.b};
        else
          hs[i].binary[c] = {uniform(0, B), ind.b, ind.c};
      }
    }

    Comparator comp = pick(std::vector<Comparator>{Comparator::Eq, Comparator::Eq, Comparator::Le, Comparator::Lt,
                                                   Comparator::Ge, Comparator::Gt});
    std::int64_t sign = (comp == Comparator::Le || comp == Comparator::Lt) ? 1 : -1;
    bool strict = comp == Comparator::Lt || comp == Comparator::Gt;
    auto slack = [&]() -> std::int64_t {
      if (comp == Comparator::Eq) return 0;
      return sign * uniform(strict ? 1 : 0, std::max<std::int64_t>(1, B / 2));
    };

    // h1 absorbs the remainder of each case, plus slack.
    auto solve = [&](std::int64_t target) -> std::optional<std::int64_t> {
      if (target % k[0] != 0) return std::nullopt;
      return target / k[0];
    };
    std::int64_t rest = atom_value - k0;
    for (std::size_t i = 1; i < m; ++i) rest -= k[i] * hs[i].atom_value;
    auto h1_atom = solve(rest);
    if (!h1_atom) return std::nullopt;
    hs[0].atom_value = *h1_atom + slack();
    for (Connective c : lang.connectives) {
      const Induced& ind = induced[c];
      std::int64_t multiplier = c == Connective::Neg ? ind.b : ind.b + ind.c;
      std::int64_t t = ind.a + (multiplier - 1) * k0;
      for (std::size_t i = 1; i < m; ++i)
        t -= k[i] * (c == Connective::Neg ? hs[i].neg->a : hs[i].binary[c].a);
      auto a1 = solve(t);
      if (!a1) return std::nullopt;
      if (c == Connective::Neg)
        hs[0].neg = CountingFunction::NegCase{*a1 + slack(), ind.b};
      else
        hs[0].binary[c] = {*a1 + slack(), ind.b, ind.c};
    }
    for (const auto& h : hs)
      if (!within_bound(h)) return std::nullopt;
    if (!within_bound(*spec.functions.counting("f"))) return std::nullopt;

    std::vector<Expr> rhs;
    for (std::size_t i = 0; i < m; ++i) {
      rhs.push_back(Expr::scale(k[i], Expr::app(hs[i].name, phi)));
      spec.functions.add(hs[i]);
    }
    if (k0 != 0) rhs.push_back(Expr::num(k0));
    spec.theorem = {lhs, comp, Expr::sum(std::move(rhs))};
    spec.id = "gen-" + std::to_string(seed);
    spec.description = "Generated exercise: prove that " + print_statement(spec.theorem) + ".";
    if (!validate_exercise(spec).empty() || !verify_by_enumeration(spec, 4, 2)) return std::nullopt;
    return spec;
  }
};

}  // namespace

ExerciseSpec generate_exercise(std::uint64_t seed, const GeneratorParams& params) {
  Builder b{std::mt19937_64(seed), params};
  for (int tries = 0; tries < 2000; ++tries)
    if (auto spec = b.attempt(seed)) return *spec;
  throw Error(ErrorCode::GenerationFailed, "could not generate an exercise for seed " + std::to_string(seed));
}

}  // namespace induction
