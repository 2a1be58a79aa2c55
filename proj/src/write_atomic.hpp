#ifndef POLYPHASE_WRITE_ATOMIC_HPP
#define POLYPHASE_WRITE_ATOMIC_HPP

#include <string>

namespace polyphase::detail {

// temp file in the target directory, then rename over the destination
void write_atomic(const std::string& path, const std::string& content);

}  // namespace polyphase::detail

#endif
