#ifndef RLW_CATALOG_HPP_
#define RLW_CATALOG_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "algebra.hpp"
#include "completion.hpp"

namespace rlw {

  // Goedel chain G_m on {-m+1, ..., 0}, product = meet, bot designated.
  Algebra goedel_chain(int m);
  // The same chain without bot.
  Algebra relative_stone_chain(int m);
  // Sugihara chain S_n, f designated (f = -1 for even n, f = e = 0 for odd n).
  Algebra sugihara_chain(int n);
  // b_m < ... < b_0 < e < a_n < ... < a_0 with a_i a_j = a_min(i,j),
  // b_k b_l = b_max(k,l), a_i b_k = b_k.
  Algebra commutative_idempotent_chain(int m, int n);
  // {0, ..., n} with a*b = max(a + b - n, 0); mv mode designates bot = f = 0.
  Algebra lukasiewicz_chain(int n, bool mv);
  // {0} together with the powers 1, 2, ..., 2^(p+1), truncated product,
  // f = 2^p, bot and top designated. p must be a prime.
  Algebra de_morgan_chain(int p);

  // family in {goedel, rsa, sugihara, com, luk, dmm}; luk takes a mode
  // "mv" or "hoop" (default mv).
  Algebra make_family(std::string_view family, std::vector<int> const& params, std::string_view mode = {});

  // The labelled diagrams as partial algebras: cepfail, strictsimp, idem-B,
  // idem-C, A1, B1, C1, A2, B2, C2.
  std::vector<std::string> figure_names();
  PartialAlgebra           figure_partial(std::string_view name);
  // The least completion (by table).
  Algebra     make_figure(std::string_view name);
  std::size_t figure_multiplicity(std::string_view name);
  // Element code of a named element of a figure.
  Elem figure_element(std::string_view figure, std::string_view element);

  // "goedel:3", "luk:2:hoop", "com:1:1", "figure:A1"; a leading "catalog:"
  // is accepted.
  Algebra resolve_catalog(std::string_view address);

  // A path to an algebra file or a catalog address.
  Algebra load_algebra_or_catalog(std::string const& ref);

  // Every family instance of size at most max_size together with every
  // figure completion.
  std::vector<Algebra> catalog_up_to(int max_size, bool with_figures = true);

}  // namespace rlw

#endif  // RLW_CATALOG_HPP_
