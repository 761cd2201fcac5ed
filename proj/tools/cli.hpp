#ifndef RLW_TOOLS_CLI_HPP_
#define RLW_TOOLS_CLI_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "rlw/amalgamation.hpp"
#include "rlw/congruence.hpp"
#include "rlw/io.hpp"
#include "rlw/morphism.hpp"

namespace rlw::cli {

  // Exit codes: 0 affirmative verdict, 1 negative verdict with a
  // certificate, 2 error.
  inline constexpr int exit_yes   = 0;
  inline constexpr int exit_no    = 1;
  inline constexpr int exit_error = 2;

  struct Outcome {
    int         status = exit_yes;
    std::string verdict;
    json        certificate = json::object();
    std::string text;  // human-readable report
  };

  struct Invocation {
    std::string              command;
    std::vector<std::string> inputs;  // file paths or catalog addresses
    json                     parameters = json::object();
  };

  std::string sha256_hex(std::string const& bytes);
  // {"ref": ..., "sha256": ...}; catalog addresses hash their canonical text.
  json input_entry(std::string const& ref);
  json run_manifest(Invocation const& inv, Outcome const& out, double seconds);

  json elems_json(std::vector<Elem> const& v);
  json congruence_json(Congruence const& c);
  json cep_json(CepReport const& r);
  json span_json(Span const& s);
  json amalgam_json(AmalgamReport const& r);
  json class_check_json(ClassCheck const& c);
  json decision_json(ApDecision const& d);

  std::string elems_str(std::vector<Elem> const& v);
  std::string blocks_str(Congruence const& c);
  std::string amalgam_text(AmalgamReport const& r);
  std::string decision_text(ApDecision const& d);

  struct ReproOptions {
    int           workers = 1;
    int           bound   = 7;
    std::uint64_t seed    = 20240611;
  };
  // Known targets: fig1 fig3 fig4 fig5 fig6 godel rsa sugihara dmm comdecomp.
  std::vector<std::string> repro_targets();
  Outcome                  run_repro(std::string const& target, ReproOptions const& opt);

}  // namespace rlw::cli

#endif  // RLW_TOOLS_CLI_HPP_
