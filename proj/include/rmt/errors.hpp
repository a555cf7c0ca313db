#pragma once

#include <stdexcept>
#include <string>

namespace rmt {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};
struct NotAntisymmetric : Error {
    explicit NotAntisymmetric(const std::string& msg) : Error(msg) {}
};
struct SingularBlock : Error {
    explicit SingularBlock(const std::string& msg) : Error(msg) {}
};
struct CoincidentPoints : Error {
    explicit CoincidentPoints(const std::string& msg) : Error(msg) {}
};
struct PoleOnSupport : Error {
    explicit PoleOnSupport(const std::string& msg) : Error(msg) {}
};
struct NonConvergentQuadrature : Error {
    explicit NonConvergentQuadrature(const std::string& msg) : Error(msg) {}
};
struct SingularMomentMatrix : Error {
    explicit SingularMomentMatrix(const std::string& msg) : Error(msg) {}
};
struct InvalidParameter : Error {
    explicit InvalidParameter(const std::string& msg) : Error(msg) {}
};
struct DegenerateField : Error {
    explicit DegenerateField(const std::string& msg) : Error(msg) {}
};
struct KExceedsN : Error {
    explicit KExceedsN(const std::string& msg) : Error(msg) {}
};
struct DimensionTooLarge : Error {
    explicit DimensionTooLarge(const std::string& msg) : Error(msg) {}
};
struct InsufficientSamples : Error {
    explicit InsufficientSamples(const std::string& msg) : Error(msg) {}
};
struct UnsupportedEnsemble : Error {
    explicit UnsupportedEnsemble(const std::string& msg) : Error(msg) {}
};
struct UnsupportedOrder : Error {
    explicit UnsupportedOrder(const std::string& msg) : Error(msg) {}
};
struct SeriesNonConvergent : Error {
    explicit SeriesNonConvergent(const std::string& msg) : Error(msg) {}
};

}  // namespace rmt
