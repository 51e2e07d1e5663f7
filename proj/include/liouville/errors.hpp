#ifndef LIOUVILLE_ERRORS_HPP
#define LIOUVILLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liouville {

// Machine-readable failure tokens. The CLI prints errc_name() on its
// diagnostic stream; library callers can switch on code().
enum class Errc {
  RefinementBudgetExceeded,
  BudgetExceeded,
  DivisorNotSeparatedFromZero,
  NotSeparatedFromZero,
  AmbiguousNearestInteger,
  DomainError,
  InvalidSchedule,
  ZeroDistance,
  WitnessSearchExhausted,
  ImageCollapse,
  DomainEscape,
  NoRootInJ,
  NonMonotoneSlice,
  DyadicInput,
  InvalidRelation,
  ZeroP,
  ConstantF,
  InvalidWitness,
  InvalidCertificate,
  ParseError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::RefinementBudgetExceeded: return "RefinementBudgetExceeded";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::DivisorNotSeparatedFromZero: return "DivisorNotSeparatedFromZero";
    case Errc::NotSeparatedFromZero: return "NotSeparatedFromZero";
    case Errc::AmbiguousNearestInteger: return "AmbiguousNearestInteger";
    case Errc::DomainError: return "DomainError";
    case Errc::InvalidSchedule: return "InvalidSchedule";
    case Errc::ZeroDistance: return "ZeroDistance";
    case Errc::WitnessSearchExhausted: return "WitnessSearchExhausted";
    case Errc::ImageCollapse: return "ImageCollapse";
    case Errc::DomainEscape: return "DomainEscape";
    case Errc::NoRootInJ: return "NoRootInJ";
    case Errc::NonMonotoneSlice: return "NonMonotoneSlice";
    case Errc::DyadicInput: return "DyadicInput";
    case Errc::InvalidRelation: return "InvalidRelation";
    case Errc::ZeroP: return "ZeroP";
    case Errc::ConstantF: return "ConstantF";
    case Errc::InvalidWitness: return "InvalidWitness";
    case Errc::InvalidCertificate: return "InvalidCertificate";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what = "") {
  throw Error(code, what);
}

}  // namespace liouville

#endif  // LIOUVILLE_ERRORS_HPP
