#ifndef DUNKL_ERROR_HPP
#define DUNKL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dunkl {

// Error categories. The numeric values are shared with the C API.
enum class ErrorCode : int {
  Domain = 1,
  Admissibility = 2,
  SingularExtension = 3,
  DegenerateParameters = 4,
  NullspaceDimension = 5,
  Parity = 6,
  Construction = 7,
  StencilDomain = 8,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

#define DUNKL_DEFINE_ERROR(Name, Code)                                        \
  class Name : public Error {                                                 \
  public:                                                                     \
    explicit Name(const std::string& what) : Error(ErrorCode::Code, what) {}  \
  };

DUNKL_DEFINE_ERROR(DomainError, Domain)
DUNKL_DEFINE_ERROR(AdmissibilityError, Admissibility)
DUNKL_DEFINE_ERROR(SingularExtensionError, SingularExtension)
DUNKL_DEFINE_ERROR(DegenerateParametersError, DegenerateParameters)
DUNKL_DEFINE_ERROR(NullspaceDimensionError, NullspaceDimension)
DUNKL_DEFINE_ERROR(ParityError, Parity)
DUNKL_DEFINE_ERROR(ConstructionError, Construction)
DUNKL_DEFINE_ERROR(StencilDomainError, StencilDomain)

#undef DUNKL_DEFINE_ERROR

} // namespace dunkl

#endif
