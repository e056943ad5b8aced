#ifndef LSS_ERRORS_HPP
#define LSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lss {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph-core
struct SyntaxError : Error { using Error::Error; };
struct SelfLoop : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct CycleDetected : Error { using Error::Error; };
struct VertexOutOfRange : Error { using Error::Error; };

// matroid
struct DimensionTooSmall : Error { using Error::Error; };
struct ElementOutsideGround : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };

// decomposition
struct NotAdmissible : Error { using Error::Error; };
struct SearchSpaceTooLarge : Error { using Error::Error; };
struct NotBinaryTree : Error { using Error::Error; };

// poly-ideal
struct DuplicateRow : Error { using Error::Error; };
struct Exploded : Error { using Error::Error; };
struct UnsupportedFormat : Error { using Error::Error; };

// numeric-verify
struct SamplingFailed : Error { using Error::Error; };
struct ZeroRowPresent : Error { using Error::Error; };
struct WitnessNotFound : Error { using Error::Error; };

} // namespace lss

#endif
