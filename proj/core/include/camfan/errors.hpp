#ifndef CAMFAN_ERRORS_HPP
#define CAMFAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace camfan {

enum class Errc {
  NonFiniteType,
  UnsupportedBondLabel,
  SingularForm,
  NotSortable,
  NotAntisortable,
  IterationCapExceeded,
  MaximalCliqueWrongSize,
  NoPartner,
  MultiplePartners,
  NotBipartiteDiagram,
  NotBipartiteWord,
  NotInitial,
  BadAscentSet,
  NoJoinIrreducible,
  RaysDependent,
  GenericityFailure,
  SpanViolation,
  MismatchWithNC,
  NonCrystallographic,
  NoRootOnLine,
  ParseError,
  UsageError,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace camfan

#endif
