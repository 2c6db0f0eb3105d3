#include "operp/config.hpp"

namespace operp {

void RunConfig::validate() const {
  if (track != "rr" && track != "general")
    throw contract_error("track must be \"rr\" or \"general\"");
  if (track == "rr" && N != 4)
    throw contract_error("the rr track is the N = 4 construction");
  if (N < 4) throw contract_error("N must be >= 4");
  if (L >= 0 && L < N - 1)
    throw contract_error("L must be at least N-1 so every permutation factors");
  if (n < 1 || n_max < 1) throw contract_error("tower levels must be >= 1");
  if (degree < 0) throw contract_error("degree must be >= 0");
  if (grid != 0 && grid < 2) throw contract_error("grid must include both endpoints");
  if (count < 0) throw contract_error("count must be >= 0");
  if (threads < 0) throw contract_error("threads must be >= 0");
}

}  // namespace operp
