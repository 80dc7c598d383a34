#pragma once

#include <stdexcept>
#include <string>

namespace anticyc {

struct NonUnitError : std::domain_error {
    explicit NonUnitError(const std::string &m) : std::domain_error(m) {}
};
struct NotCoprimeError : std::domain_error {
    explicit NotCoprimeError(const std::string &m) : std::domain_error(m) {}
};
struct MismatchedGroupError : std::domain_error {
    explicit MismatchedGroupError(const std::string &m) : std::domain_error(m) {}
};
struct BadTowerError : std::domain_error {
    explicit BadTowerError(const std::string &m) : std::domain_error(m) {}
};
struct NotDivisorError : std::domain_error {
    explicit NotDivisorError(const std::string &m) : std::domain_error(m) {}
};
struct BadDiscriminantError : std::domain_error {
    explicit BadDiscriminantError(const std::string &m) : std::domain_error(m) {}
};
struct MismatchedDiscriminantError : std::domain_error {
    explicit MismatchedDiscriminantError(const std::string &m) : std::domain_error(m) {}
};
struct AssumptionFailedError : std::domain_error {
    explicit AssumptionFailedError(const std::string &m) : std::domain_error(m) {}
};
struct NotSplitError : std::domain_error {
    explicit NotSplitError(const std::string &m) : std::domain_error(m) {}
};
struct ParityError : std::domain_error {
    explicit ParityError(const std::string &m) : std::domain_error(m) {}
};
struct NotSquareFreeError : std::domain_error {
    explicit NotSquareFreeError(const std::string &m) : std::domain_error(m) {}
};
struct BadPrimeError : std::domain_error {
    explicit BadPrimeError(const std::string &m) : std::domain_error(m) {}
};
struct NonInvertibleWeightError : std::domain_error {
    explicit NonInvertibleWeightError(const std::string &m) : std::domain_error(m) {}
};
struct NoEigenvectorError : std::runtime_error {
    explicit NoEigenvectorError(const std::string &m) : std::runtime_error(m) {}
};
struct AmbiguousError : std::runtime_error {
    explicit AmbiguousError(const std::string &m) : std::runtime_error(m) {}
};
struct NoEmbeddingError : std::runtime_error {
    explicit NoEmbeddingError(const std::string &m) : std::runtime_error(m) {}
};
struct EmptyFamilyError : std::domain_error {
    explicit EmptyFamilyError(const std::string &m) : std::domain_error(m) {}
};
struct BadReductionError : std::domain_error {
    explicit BadReductionError(const std::string &m) : std::domain_error(m) {}
};
struct TooLargeError : std::domain_error {
    explicit TooLargeError(const std::string &m) : std::domain_error(m) {}
};
struct SupersingularError : std::domain_error {
    explicit SupersingularError(const std::string &m) : std::domain_error(m) {}
};
struct BadConfigError : std::runtime_error {
    explicit BadConfigError(const std::string &m) : std::runtime_error(m) {}
};
struct LevelMismatchError : std::domain_error {
    explicit LevelMismatchError(const std::string &m) : std::domain_error(m) {}
};
struct NonUnitAlphaError : std::domain_error {
    explicit NonUnitAlphaError(const std::string &m) : std::domain_error(m) {}
};
struct NoSolutionError : std::runtime_error {
    explicit NoSolutionError(const std::string &m) : std::runtime_error(m) {}
};
struct InconsistentLevelsError : std::domain_error {
    explicit InconsistentLevelsError(const std::string &m) : std::domain_error(m) {}
};
struct NormalizationUnpinnedError : std::runtime_error {
    explicit NormalizationUnpinnedError(const std::string &m) : std::runtime_error(m) {}
};
struct UnsupportedQuotientError : std::domain_error {
    explicit UnsupportedQuotientError(const std::string &m) : std::domain_error(m) {}
};
struct SizeError : std::domain_error {
    explicit SizeError(const std::string &m) : std::domain_error(m) {}
};
struct CorruptCacheError : std::runtime_error {
    explicit CorruptCacheError(const std::string &m) : std::runtime_error(m) {}
};
struct VersionMismatchError : std::runtime_error {
    explicit VersionMismatchError(const std::string &m) : std::runtime_error(m) {}
};
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string &m) : std::runtime_error(m) {}
};

}  // namespace anticyc
