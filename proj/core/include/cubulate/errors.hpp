#pragma once

#include <stdexcept>
#include <string>

namespace cubulate {

// Error categories map to process exit codes in the CLI: everything here is an
// input or scale problem (exit 2).  Negative mathematical findings (a flat
// profile, a missing witness, a specialness pathology) are ordinary results,
// never exceptions.
enum class ErrorKind {
  MalformedInput,    // unparseable file, unknown symbol, bad partition
  Divergence,        // rewrite budget exhausted
  Size,              // vertex / wall / cube budget exceeded
  Scale,             // ball too small for the requested computation
  NotCodimensionOne, // subgroup complement lacks two deep components
  BoundaryUncertainty, // predicate asked about an untrusted wall
  Structural,        // inconsistent complex data (bad face gluing etc.)
  Internal           // invariant violation, reported as a bug
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& where,
                              const std::string& what) {
  throw Error(kind, where, what);
}

} // namespace cubulate
