#pragma once

#include <random>

#include "qs3/element.hpp"
#include "qs3/rewrite.hpp"

namespace qs3::testutil {

inline Word random_word(const AlgebraPresentation& pres, std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, 2 * pres.num_gens() - 1);
  Word w;
  int L = len(rng);
  for (int i = 0; i < L; ++i) {
    int c = pick(rng);
    w.push_back(gen_letter(c / 2, c % 2));
  }
  return w;
}

inline NCElement random_element(const AlgebraPresentation& pres, std::mt19937_64& rng,
                                int max_len = 5, int max_terms = 3) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  NCElement e(pres);
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    NCElement nf = normal_form(random_word(pres, rng, max_len), pres);
    nf *= cplx(coeff(rng), coeff(rng));
    e += nf;
  }
  return e;
}

inline std::vector<AlgebraPresentation> sample_presentations() {
  return {
      AlgebraPresentation::sphere_pq(0.5, 0.3, 0.37),
      AlgebraPresentation::sphere_00(0.37),
      AlgebraPresentation::sphere_pq(0.0, 0.6, 0.25),  // hybrid routing
      AlgebraPresentation::disc(0.5),
      AlgebraPresentation::disc(0.0),
      AlgebraPresentation::crossed_plus(0.37),
      AlgebraPresentation::crossed_minus(0.37),
      AlgebraPresentation::torus(0.37),
  };
}

}  // namespace qs3::testutil
