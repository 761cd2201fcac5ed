#ifndef RLW_IO_HPP_
#define RLW_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "algebra.hpp"

namespace rlw {

  using json = nlohmann::ordered_json;

  inline constexpr std::string_view algebra_format = "rlw-algebra/1";

  json    to_json(Algebra const& A);
  Algebra algebra_from_json(json const& j);

  // Canonical text: compact JSON with keys in a fixed order and a trailing
  // newline, so that serialize(parse_algebra(s)) == s for canonical s.
  std::string serialize(Algebra const& A);
  Algebra     parse_algebra(std::string_view text);

  Algebra load_algebra(std::filesystem::path const& path);
  void    save_algebra(Algebra const& A, std::filesystem::path const& path);

  std::string read_file(std::filesystem::path const& path);
  void        write_file(std::filesystem::path const& path, std::string const& text);

  // Helpers shared by the other JSON readers.
  namespace detail {
    json const& member(json const& j, char const* key);
    int         as_int(json const& j, char const* what);
    Order       order_from_json(json const& j, int n);
    Constants   constants_from_json(json const& j, int n);
    json        order_to_json(Order const& o);
    json        constants_to_json(Constants const& c);
  }  // namespace detail

}  // namespace rlw

#endif  // RLW_IO_HPP_
