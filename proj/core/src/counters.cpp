#include "gvd/counters.hpp"

namespace gvd {

Counters& counters() {
  thread_local Counters c;
  return c;
}

}  // namespace gvd
