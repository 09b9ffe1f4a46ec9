// End-to-end acceptance run: one line per criterion, nonzero exit on any
// failure.  All comparisons are exact; every fixture is seed-deterministic.
#include <algorithm>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "segalkit/bridge.hpp"
#include "segalkit/expansion.hpp"
#include "segalkit/fixtures.hpp"
#include "segalkit/hypermoment.hpp"
#include "segalkit/undecking.hpp"

using namespace segal;

namespace {

bool all_ok = true;

void line(int number, const std::string& label, bool ok,
          const std::string& note = "") {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << number << ". " << label;
  if (!note.empty()) std::cout << " (" << note << ")";
  std::cout << "\n";
  all_ok = all_ok && ok;
}

std::vector<long long> level_sizes(const TruncSSet& S) {
  std::vector<long long> out;
  for (int n = 0; n <= S.trunc_level; ++n) out.push_back(S.size(n));
  return out;
}

}  // namespace

int main() {
  // ---- shared corpora ------------------------------------------------------
  // Twenty seed-deterministic categories with at most five objects.
  std::vector<FinCat> small_cats;
  for (std::uint64_t s = 101; s <= 110; ++s)
    small_cats.push_back(random_poset(s, 4 + static_cast<int>(s % 2)));
  for (std::uint64_t s = 201; s <= 210; ++s)
    small_cats.push_back(random_category(s, 3));
  std::vector<TruncSSet> good_nerves;
  for (const FinCat& C : small_cats) good_nerves.push_back(nerve(C, 5));

  // Five valid simplicial sets with a doubled filler, so spine uniqueness and
  // the exactness squares must fail.
  std::vector<TruncSSet> doubled = {
      doubled_filler(chain_poset(2), 5),
      doubled_filler(chain_poset(3), 5),
      doubled_filler(chain_poset(4), 5),
      doubled_filler(random_poset(101, 5), 5),
      doubled_filler(random_poset(105, 5), 5),
  };

  // Operadic corpus: extracted from nerves of the core and random fixtures.
  std::vector<FinCat> op_bases = {
      chain_poset(0),          chain_poset(1),          chain_poset(2),
      indiscrete_groupoid(2),  indiscrete_groupoid(3),  random_poset(301, 4),
      random_poset(302, 5),    random_category(401, 3), random_category(402, 4),
      random_category(403, 4),
  };
  std::vector<TruncSSet> op_nerves;
  std::vector<UnaryOpCat> opcats;
  for (const FinCat& C : op_bases) {
    op_nerves.push_back(nerve(C, 4));
    opcats.push_back(operadic_from_upper_two_segal(op_nerves.back()));
  }

  // ---- 1: nerve sanity -----------------------------------------------------
  {
    TruncSSet S = nerve(chain_poset(2), 5);
    bool ok = level_sizes(S) == std::vector<long long>{3, 6, 10, 15, 21, 28} &&
              check_simplicial_identities(S).passed && check_segal(S).passed &&
              check_two_segal(S, TwoSegalVariant::Both).passed;
    line(1, "3-chain nerve: level counts, simplicial laws, spine and square checks",
         ok);
  }

  // ---- 2: subdivision detects the square conditions ------------------------
  {
    bool ok = true;
    for (const TruncSSet& S : good_nerves)
      ok = ok && check_segal(edgewise_subdivision(S)).passed;
    int witnessed = 0;
    for (const TruncSSet& X : doubled) {
      CheckReport r = check_segal(edgewise_subdivision(X));
      if (!r.passed && !r.witnesses.empty()) ++witnessed;
    }
    ok = ok && witnessed == static_cast<int>(doubled.size());
    std::ostringstream note;
    note << good_nerves.size() << " subdivided nerves pass, " << witnessed
         << " doubled fixtures fail with witnesses";
    line(2, "subdivision spine check", ok, note.str());
  }

  // ---- 3: one-level shifts detect the one-sided squares --------------------
  {
    bool ok = true;
    for (const TruncSSet& S : good_nerves) {
      bool up = check_two_segal(S, TwoSegalVariant::Upper).passed;
      bool lo = check_two_segal(S, TwoSegalVariant::Lower).passed;
      ok = ok && up && lo && check_segal(upper_decalage(S).body).passed == up &&
           check_segal(lower_decalage(S).body).passed == lo;
    }
    for (const TruncSSet& X : doubled) {
      bool up = check_two_segal(X, TwoSegalVariant::Upper).passed;
      bool lo = check_two_segal(X, TwoSegalVariant::Lower).passed;
      ok = ok && check_segal(upper_decalage(X).body).passed == up &&
           check_segal(lower_decalage(X).body).passed == lo;
    }
    line(3, "shifted spine check agrees with the one-sided square check", ok,
         "25 fixtures, both sides");
  }

  // ---- 4: strict factorization on the subdivided 3-chain nerve -------------
  {
    TruncSSet S = nerve(chain_poset(2), 7);
    TruncSSet sd = edgewise_subdivision(S);
    FinCat C = category_from_segal(sd);
    std::set<std::string> top_image, bot_image;
    for (const std::string& y : S.levels[2]) {
      top_image.insert(S.apply_degen(2, 2, y));
      bot_image.insert(S.apply_degen(2, 0, y));
    }
    std::set<std::string> identities;
    for (const std::string& x : C.objects) identities.insert(C.ident.at(x));
    std::set<std::string> meet;
    std::set_intersection(top_image.begin(), top_image.end(), bot_image.begin(),
                          bot_image.end(), std::inserter(meet, meet.begin()));
    bool ok = C.objects.size() == 6 && C.arrows.size() == 15 &&
              check_strict_factorization(C, top_image, bot_image).passed &&
              check_strict_factorization(C, bot_image, top_image).passed &&
              meet == identities && identities.size() == 6;
    line(4, "subdivision category splits strictly in both class orders", ok,
         "6 objects, 15 arrows, 6 shared identities");
  }

  // ---- 5: operadic axioms and unique lifting, with a mutation probe --------
  {
    UnaryOpCat O = operadic_from_upper_two_segal(nerve(chain_poset(2), 5));
    bool ok = check_unary_operadic(O).passed && check_blow_up(O).passed;

    UnaryOpCat M = O;
    auto it = M.phi1.begin();
    for (const std::string& a : M.cat.arrows)
      if (a != it->second) {
        it->second = a;
        break;
      }
    CheckReport r = check_blow_up(M);
    std::string note = "mutation undetected";
    bool mutation_caught = !r.passed && !r.witnesses.empty() &&
                           r.witnesses.front().subject.size() >= 2;
    if (mutation_caught)
      note = "rewrite caught at h=" + r.witnesses.front().subject[0] +
             ", p=" + r.witnesses.front().subject[1];
    line(5, "axioms and unique lifting hold; one fiber-map rewrite breaks lifting",
         ok && mutation_caught, note);
  }

  // ---- 6: reconstruction round trips ---------------------------------------
  {
    bool ok = true;
    for (size_t i = 0; i < opcats.size(); ++i) {
      ok = ok && verify_round_trips(op_nerves[i], 4).passed;
      ok = ok && verify_round_trips(opcats[i], 4).passed;
    }
    std::ostringstream note;
    note << opcats.size() << " fixtures, both directions, to level 4";
    line(6, "chain space of the extraction, and extraction of the chain space",
         ok, note.str());
  }

  // ---- 7: fiber classification laws ----------------------------------------
  {
    bool ok = true;
    long long arrows = 0;
    for (const UnaryOpCat& O : opcats) {
      FiberClassification fc = classify_fibers(O);
      ok = ok && fc.report.passed && classify_fiber_isos(O).passed;
      arrows += static_cast<long long>(fc.records.size());
    }
    std::ostringstream note;
    note << arrows << " arrows classified, zero violations";
    line(7, "fiber laws: local terminal = invertible, chosen = identity; "
            "inclusion invertibility by codomain", ok, note.str());
  }

  // ---- 8: the expanded category triangle -----------------------------------
  {
    UnaryOpCat O = operadic_from_upper_two_segal(nerve(chain_poset(2), 5));
    ExpandedCategory E = expanded_category(O);
    FinCat T = opposite_cat(twisted_arrow_category(chain_poset(2)));
    FinCat D = opposite_cat(
        category_from_segal(edgewise_subdivision(undeck(O, 7))));
    long long triples = 0;
    bool assoc = true;
    for (const std::string& f : E.cat.arrows)
      for (const std::string& g : E.cat.out_of(E.cat.cod.at(f)))
        for (const std::string& h : E.cat.out_of(E.cat.cod.at(g))) {
          ++triples;
          assoc = assoc && E.cat.compose(E.cat.compose(h, g), f) ==
                               E.cat.compose(h, E.cat.compose(g, f));
        }
    bool ok = E.cat.objects.size() == 6 && E.cat.arrows.size() == 15 &&
              T.objects.size() == 6 && T.arrows.size() == 15 &&
              D.objects.size() == 6 && D.arrows.size() == 15 &&
              find_isomorphism(E.cat, T).has_value() &&
              find_isomorphism(E.cat, D).has_value() && assoc;
    std::ostringstream note;
    note << "6 objects, 15 arrows each; associativity over " << triples
         << " composable triples";
    line(8, "two-sided arrows match reversed factorizations and the subdivided "
            "chain space", ok, note.str());
  }

  // ---- 9: the full gate ----------------------------------------------------
  {
    UnaryOpCat O = operadic_from_upper_two_segal(nerve(chain_poset(2), 5));
    HypermomentReport H = check_hypermoment(O);
    bool ok = H.units.size() == 3 && H.units == O.chosen &&
              H.cond_isos_are_automorphisms &&
              H.cond_terminal_domains_identities && H.is_hypermoment &&
              H.is_unital && H.is_rigid && H.roundtrip_ok && H.passed &&
              O.cat.objects.size() == 6 && O.cat.arrows.size() == 10;

    HypermomentReport G = check_hypermoment(
        operadic_from_upper_two_segal(nerve(indiscrete_groupoid(2), 5)));
    ok = ok && !G.cond_isos_are_automorphisms;
    line(9, "unit set, gate clauses, and dual-of-active reconstruction; "
            "groupoid fixture reports the automorphism condition false",
         ok, "3 units; 6 objects, 10 arrows recovered");
  }

  // ---- 10: both class orders factor orthogonally ---------------------------
  {
    bool ok = true;
    for (const UnaryOpCat& O : opcats) {
      ActiveInert ai = active_inert(O);
      ok = ok && ai.ofs_active_inert && ai.ofs_inert_active;
    }
    std::ostringstream note;
    note << opcats.size() << " fixtures, both orders";
    line(10, "orthogonal factorization in both class orders", ok, note.str());
  }

  std::cout << (all_ok ? "all criteria hold" : "criteria failed") << "\n";
  return all_ok ? 0 : 1;
}
