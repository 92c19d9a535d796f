#include "corpus_util.hpp"

namespace qv::corpus_detail {
void register_s5(std::vector<IdentityRecord>& out) { (void)out; }
}  // namespace qv::corpus_detail
