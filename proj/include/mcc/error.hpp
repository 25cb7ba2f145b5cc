#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace mcc {

enum class Errc {
  mismatched_ground_sets,
  ground_set_too_large,
  invalid_instance,
  not_closed,
  output_limit_exceeded,
  not_a_superkey,
  no_decomposition,
  empty_graph,
  empty_edge,
  not_standard,
  hypotheses_not_met,
  set_too_large,
  invalid_params,
  parse_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::mismatched_ground_sets: return "MismatchedGroundSets";
    case Errc::ground_set_too_large: return "GroundSetTooLarge";
    case Errc::invalid_instance: return "InvalidInstance";
    case Errc::not_closed: return "NotClosed";
    case Errc::output_limit_exceeded: return "OutputLimitExceeded";
    case Errc::not_a_superkey: return "NotASuperkey";
    case Errc::no_decomposition: return "NoDecomposition";
    case Errc::empty_graph: return "EmptyGraph";
    case Errc::empty_edge: return "EmptyEdge";
    case Errc::not_standard: return "NotStandard";
    case Errc::hypotheses_not_met: return "HypothesesNotMet";
    case Errc::set_too_large: return "SetTooLarge";
    case Errc::invalid_params: return "InvalidParams";
    case Errc::parse_error: return "ParseError";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(Errc::parse_error, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mcc
