#ifndef CIG_ERROR_HPP
#define CIG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cig {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input permutations/groups live on different point sets.
struct DegreeMismatch : Error {
  explicit DegreeMismatch(const std::string& msg) : Error(msg) {}
};

// Image array is not a bijection.
struct MalformedPermutation : Error {
  explicit MalformedPermutation(const std::string& msg) : Error(msg) {}
};

// A desk-scale guardrail was hit (degree, order, enumeration, lattice size).
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

// Element claimed to lie in a group does not.
struct NotInGroup : Error {
  explicit NotInGroup(const std::string& msg) : Error(msg) {}
};

// Module action fails a required hypothesis (e.g. irreducibility).
struct ReducibleModule : Error {
  explicit ReducibleModule(const std::string& msg) : Error(msg) {}
};

// Catalog data fails its declared contract.
struct ValidationError : Error {
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Name not present in the catalog.
struct UnknownName : Error {
  explicit UnknownName(const std::string& msg) : Error(msg) {}
};

// Cycle-notation or file syntax problem.
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace cig

#endif
