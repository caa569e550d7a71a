#include "qchaos/error.hpp"

namespace qchaos {

ResourceError::ResourceError(const std::string& what, std::uint32_t requested,
                             std::uint32_t limit)
    : std::runtime_error(what + ": n=" + std::to_string(requested) +
                         " exceeds limit " + std::to_string(limit)),
      requested_(requested),
      limit_(limit) {}

}  // namespace qchaos
