// End-to-end acceptance run: one PASS/FAIL line per criterion. Library
// results are checked against the brute-force oracles where one exists.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "oracles.hpp"
#include "rlw/amalgamation.hpp"
#include "rlw/catalog.hpp"
#include "rlw/completion.hpp"
#include "rlw/congruence.hpp"
#include "rlw/nested_sum.hpp"
#include "rlw/parallel.hpp"
#include "rlw/properties.hpp"

using namespace rlw;

namespace {

  int workers = 1;
  int bound   = 7;

  struct Criterion {
    std::vector<std::string> failures;

    void expect(bool ok, std::string const& what) {
      if (!ok) {
        failures.push_back(what);
      }
    }
  };

  std::vector<Elem> sorted(std::vector<Elem> v) {
    std::sort(v.begin(), v.end());
    return v;
  }

  std::vector<Elem> class_of(oracle::Partition const& p, Elem x) {
    std::vector<Elem> out;
    for (Elem y = 0; y < static_cast<Elem>(p.size()); ++y) {
      if (p[y] == p[x]) {
        out.push_back(y);
      }
    }
    return out;
  }

  Span figure_span(int which) {
    std::string       i = std::to_string(which);
    Algebra           A = make_figure("A" + i), B = make_figure("B" + i), C = make_figure("C" + i);
    std::vector<Elem> p1, p2;
    for (auto const& n : figure_partial("A" + i).element_names) {
      p1.push_back(figure_element("B" + i, n));
      p2.push_back(figure_element("C" + i, n));
    }
    return make_span(A, B, C, p1, p2);
  }

  bool has_step(AmalgamReport const& r, RefutationStep::Rule rule, Elem b, Elem c) {
    return std::any_of(r.trace.begin(), r.trace.end(),
                       [&](RefutationStep const& s) { return s.rule == rule && s.b == b && s.c == c; });
  }

  void cep_failure(Criterion& c) {
    auto res = search_completions(figure_partial("cepfail"), {0, workers, {}});
    c.expect(!res.algebras.empty(), "no completion of the cepfail diagram");
    Elem e = figure_element("cepfail", "e"), a = figure_element("cepfail", "a"), b = figure_element("cepfail", "b");
    std::vector<Elem> eab = sorted({e, a, b});
    for (auto const& A : res.algebras) {
      c.expect(!oracle::cep(A), A.name() + ": oracle finds CEP");
      auto r = has_cep(A);
      c.expect(!r.holds, A.name() + ": has_cep holds");
      c.expect(r.subuniverse == eab, A.name() + ": witness subalgebra is not {e,a,b}");
      if (r.holds || r.subuniverse != eab) {
        continue;
      }
      auto    pos = [&](Elem x) { return static_cast<Elem>(std::find(eab.begin(), eab.end(), x) - eab.begin()); };
      Algebra B   = oracle::sub(A, eab);
      auto    th  = oracle::principal(B, pos(a), pos(e));
      c.expect(r.theta.block_vector() == th, A.name() + ": witness is not Theta_B(a,e)");
      std::vector<Elem> in_b;
      for (Elem x : class_of(th, pos(e))) {
        in_b.push_back(eab[x]);
      }
      c.expect(sorted(in_b) == sorted({e, a}), A.name() + ": e-class in B is not {e,a}");
      std::vector<Elem> in_a;
      for (Elem x : class_of(oracle::principal(A, a, e), e)) {
        if (std::binary_search(eab.begin(), eab.end(), x)) {
          in_a.push_back(x);
        }
      }
      c.expect(in_a == eab, A.name() + ": e-class of Theta_A(a,e) on B is not {e,a,b}");
      c.expect(cns_generated(A, {a}) == eab, A.name() + ": CNS generated by a is not {e,a,b}");
    }
  }

  void decisions(Criterion& c, std::vector<std::pair<std::vector<Algebra>, bool>> const& cases,
                 std::function<void(Criterion&, ApDecision const&)> const& extra = {}) {
    for (auto const& [gens, want] : cases) {
      std::string label;
      for (auto const& g : gens) {
        label += (label.empty() ? "" : "+") + g.name();
      }
      auto d = decide_ap(gens, true, workers);
      c.expect(d.ap == want, label + (want ? ": expected AP" : ": expected no AP"));
      c.expect(d.routes_agree.value_or(false), label + ": 1AP and essential routes disagree");
      if (extra) {
        extra(c, d);
      }
    }
  }

  void goedel(Criterion& c) {
    decisions(c,
              {{{goedel_chain(2)}, true}, {{goedel_chain(3)}, true}, {{goedel_chain(4)}, false}, {{goedel_chain(5)}, false}},
              [](Criterion& c, ApDecision const& d) {
                if (!d.ap) {
                  auto const& w = d.check ? d.check->witness_span : std::nullopt;
                  c.expect(w && w->A.size() == 3 && w->C.size() == 4, "witness span is not |A| = 3, |C| = 4");
                }
              });
  }

  void stone(Criterion& c) {
    decisions(c, {{{relative_stone_chain(2)}, true}, {{relative_stone_chain(3)}, false}});
  }

  void sugihara(Criterion& c) {
    decisions(c, {{{sugihara_chain(2)}, true},
                  {{sugihara_chain(3)}, true},
                  {{sugihara_chain(4)}, true},
                  {{sugihara_chain(2), sugihara_chain(3)}, true},
                  {{sugihara_chain(5)}, false},
                  {{sugihara_chain(6)}, false}});
  }

  void strictly_simple(Criterion& c) {
    Algebra A = make_figure("strictsimp");
    c.expect(classify(A).strictly_simple, "not classified strictly simple");
    c.expect(oracle::congruences(A).size() == 2, "oracle: not simple");
    for (auto const& S : oracle::subuniverses(A)) {
      c.expect(S.size() == 1 || static_cast<int>(S.size()) == A.size(), "oracle: a proper subalgebra has > 1 element");
    }
    c.expect(strictly_simple_ap(A).outcome == FastPathResult::Outcome::ap, "fast path does not give AP");
    c.expect(decide_ap({A}, true, workers).ap, "decide_ap does not give AP");
  }

  void de_morgan(Criterion& c) {
    for (int p : {2, 3}) {
      Algebra                        M = de_morgan_chain(p);
      std::string                    l = "M_" + std::to_string(p);
      std::vector<std::vector<Elem>> want{{0, 1, p + 1, p + 2}, all_elements(M)};
      c.expect(subuniverses(M) == want, l + ": subuniverses");
      c.expect(oracle::subuniverses(M) == want, l + ": oracle subuniverses");
      c.expect(classify(M).simple && oracle::congruences(M).size() == 2, l + ": not simple");
      c.expect(simple_chain_ap(M).outcome == FastPathResult::Outcome::ap, l + ": fast path");
      c.expect(decide_ap({M}, true, workers).ap, l + ": decide_ap");
    }
  }

  void knotted(Criterion& c) {
    for (int which : {1, 2}) {
      std::string i = std::to_string(which);
      Span        s = figure_span(which);
      auto        r = refute_chain_amalgam(s);
      c.expect(r.verdict == Verdict::refuted, "span " + i + ": not refuted");
      c.expect(r.verdict == Verdict::refuted && replay_refutation(s, r), "span " + i + ": trace does not replay");
      auto B = [&](char const* n) { return figure_element("B" + i, n); };
      auto C = [&](char const* n) { return figure_element("C" + i, n); };
      if (which == 1) {
        c.expect(has_step(r, RefutationStep::Rule::r2, B("a"), C("b")), "span 1: a~b missing");
        c.expect(has_step(r, RefutationStep::Rule::r1, B("a"), C("f")), "span 1: a~f missing");
      } else {
        c.expect(has_step(r, RefutationStep::Rule::r2, B("x"), C("y")), "span 2: x~y missing");
        c.expect(has_step(r, RefutationStep::Rule::r1, B("x"), C("z")), "span 2: y~z missing");
      }
      auto f = find_amalgam(s, ClassSpec::chains_up_to(bound, s.B.signature()), false, workers);
      c.expect(f.verdict == Verdict::not_found_exhaustive, "span " + i + ": bounded search is not NotFoundExhaustive");
    }
  }

  void idempotent(Criterion& c) {
    Algebra       B = make_figure("idem-B"), C = make_figure("idem-C");
    Span          s = make_span(Algebra(), B, C, {B.unit()}, {C.unit()});
    ProfileFilter idem;
    idem.idempotent = true;
    auto r          = find_amalgam(s, ClassSpec::chains_up_to(bound, B.signature(), idem), true, workers);
    c.expect(r.verdict == Verdict::not_found_exhaustive,
             "one-sided search over idempotent chains of size <= " + std::to_string(bound) + " returned "
                 + std::string(to_string(r.verdict))
                 + (r.D ? " (D of size " + std::to_string(r.D->size()) + ")" : ""));
  }

  Algebra plain_chain(Algebra const& A) {
    return chain_copy(plain_reduct(A)).value();
  }

  void nested_sums(Criterion& c) {
    std::vector<Algebra> pool;
    for (auto const& X : catalog_up_to(5, false)) {
      if (!X.is_chain() || X.size() < 2) {
        continue;
      }
      Algebra P = plain_chain(X);
      if (factor_nested_sum(P).size() == 1
          && std::none_of(pool.begin(), pool.end(), [&](Algebra const& Y) { return oracle::isomorphic(P, Y); })) {
        pool.push_back(P);
      }
    }
    std::mt19937_64 rng(20240611);
    int             done = 0;
    while (done < 100) {
      int                  k = std::uniform_int_distribution<int>(1, 4)(rng);
      std::vector<Algebra> comps;
      for (int i = 0; i < k; ++i) {
        comps.push_back(pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)]);
      }
      Algebra sum;
      try {
        sum = nested_sum(comps);
      } catch (Error const&) {
        continue;
      }
      ++done;
      c.expect(oracle::residuated(sum), "a sum is not residuated");
      auto back = factor_nested_sum(sum);
      bool ok   = back.size() == comps.size();
      for (size_t i = 0; ok && i < comps.size(); ++i) {
        ok = oracle::isomorphic(back[i], comps[i]);
      }
      c.expect(ok, "a composition of " + std::to_string(k) + " components does not factor back");
    }

    ProfileFilter ci;
    ci.commutative = true;
    ci.idempotent  = true;
    for (int n = 1; n <= 6; ++n) {
      for (auto const& X : enumerate_chains(n, ci, {}, workers)) {
        auto parts = factor_nested_sum(X);
        bool ok    = false;
        for (size_t cut = 0; cut <= parts.size() && !ok; ++cut) {
          std::vector<Algebra> head(parts.begin(), parts.begin() + cut), tail(parts.begin() + cut, parts.end());
          bool heads = std::all_of(head.begin(), head.end(), [](Algebra const& P) {
            for (int m = 0; m + 3 <= P.size(); ++m) {
              if (oracle::isomorphic(P, commutative_idempotent_chain(m, P.size() - 3 - m))) {
                return true;
              }
            }
            return false;
          });
          if (!heads) {
            continue;
          }
          Algebra R = tail.empty() ? relative_stone_chain(1) : nested_sum(tail);
          if (!oracle::isomorphic(R, relative_stone_chain(R.size()))) {
            continue;
          }
          head.push_back(R);
          ok = oracle::isomorphic(nested_sum(head), X);
        }
        c.expect(ok, "a commutative idempotent chain of size " + std::to_string(n) + " does not decompose");
      }
    }
  }

  void property_suites(Criterion& c) {
    for (auto const& A : catalog_up_to(9)) {
      std::string l = A.name();
      c.expect(oracle::residuated(A), l + ": residuation law");
      auto cons = congruences(A);
      auto cns  = convex_normal_subalgebras(A);
      c.expect(cons.size() == cns.size(), l + ": congruence/CNS counts differ");
      for (size_t i = 0; i < cons.size() && i < cns.size(); ++i) {
        c.expect(cons[i].class_of(A.unit()) == cns[i], l + ": congruence/CNS mismatch");
      }
      if (A.size() <= 7) {
        auto want = oracle::convex_normal_subalgebras(A);
        c.expect(std::set<std::vector<Elem>>(cns.begin(), cns.end()) == std::set<std::vector<Elem>>(want.begin(), want.end()),
                 l + ": CNS differ from the oracle");
      }
      if (A.is_chain()) {
        for (Elem d = 0; d < A.size(); ++d) {
          int fixed = 0;
          for (Elem x = 0; x < A.size(); ++x) {
            fixed += A.ldiv(x, d) == x;
          }
          c.expect(fixed <= 1, l + ": more than one fixed point of x\\d");
        }
        c.expect(classify(A).fsi, l + ": chain not FSI");
      }
      if (A.is_commutative()) {
        c.expect(has_cep(A).holds, l + ": commutative without CEP");
      }
    }
    for (int n = 2; n <= 9; ++n) {
      c.expect(check_identity(sugihara_chain(n), "~~x = x").holds, "S_" + std::to_string(n) + " not involutive");
    }
    for (int p : {2, 3, 5, 7}) {
      c.expect(check_identity(de_morgan_chain(p), "~~x = x").holds, "M_" + std::to_string(p) + " not involutive");
    }
  }

  void oracle_equivalence(Criterion& c) {
    for (auto const& A : catalog_up_to(6)) {
      auto                         mine = congruences(A);
      auto                         want = oracle::congruences(A);
      std::set<oracle::Partition> a, b(want.begin(), want.end());
      for (auto const& t : mine) {
        a.insert(t.block_vector());
      }
      c.expect(a == b && mine.size() == want.size(), A.name() + ": congruences differ");
      c.expect(classify(A).fsi == oracle::fsi(A), A.name() + ": FSI differs");
      for (Elem x = 0; x < A.size(); ++x) {
        for (Elem y = 0; y < A.size(); ++y) {
          c.expect(principal_congruence(A, x, y).block_vector() == oracle::principal(A, x, y),
                   A.name() + ": principal congruence differs");
        }
      }
    }
    std::vector<std::vector<Algebra>> varieties{{goedel_chain(2)}, {goedel_chain(3)}, {goedel_chain(4)}, {goedel_chain(5)},
                                                {relative_stone_chain(2)}, {relative_stone_chain(3)},
                                                {sugihara_chain(2)}, {sugihara_chain(3)}, {sugihara_chain(4)},
                                                {sugihara_chain(2), sugihara_chain(3)}, {sugihara_chain(5)},
                                                {sugihara_chain(6)}, {make_figure("strictsimp")}, {de_morgan_chain(2)},
                                                {de_morgan_chain(3)}};
    for (auto const& gens : varieties) {
      auto d = decide_ap(gens, true, workers);
      c.expect(d.routes_agree.value_or(false), gens.front().name() + ": routes disagree");
    }
  }

}  // namespace

int main() {
  workers = default_workers();
  if (char const* b = std::getenv("RLW_BOUND")) {
    bound = std::atoi(b);
  }
  std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"CEP failure of the cepfail algebra", cep_failure},
      {"Goedel chains", goedel},
      {"relative Stone chains", stone},
      {"Sugihara chains", sugihara},
      {"strictly simple example", strictly_simple},
      {"De Morgan chains", de_morgan},
      {"knotted spans refuted", knotted},
      {"one-sided idempotent span", idempotent},
      {"nested-sum round trip and decomposition", nested_sums},
      {"property suites on the catalog", property_suites},
      {"oracle equivalence and route cross-check", oracle_equivalence},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    auto      t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (std::exception const& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool   ok   = c.failures.empty();
    failed += !ok;
    std::printf("criterion %zu: %s  %s (%.2fs)\n", i + 1, ok ? "PASS" : "FAIL", criteria[i].first.c_str(), secs);
    for (size_t k = 0; k < c.failures.size() && k < 10; ++k) {
      std::printf("    %s\n", c.failures[k].c_str());
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
