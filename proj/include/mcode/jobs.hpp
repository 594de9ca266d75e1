#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "mcode/codes.hpp"

namespace mcode {

// One batch invocation of the tool. Exit codes: 0 success / verified,
// 1 verification failure, 2 invalid input.
struct JobSpec {
    enum class Command { Gen, Dual, Dim, Check, Distance, Bounds };

    Command command = Command::Dim;
    FieldSpec field;
    int m = 1;
    int r = 1;
    std::string j_descriptor = "classical";  // classical | box:r1,r2,... | <file.json>
    long long k = 1;
    std::string grid = "full";  // full | random:s1,s2,... | <file.json>
    std::string format = "pretty";  // pretty | csv | json
    std::string out_path;  // empty writes to the output stream
    std::string h_path;    // check: externally supplied parity-check matrix (JSON)
    uint64_t cap = kDefaultDistanceCap;
    uint64_t seed = 0;
    bool show_basis = false;
};

// Default moduli for the small extension fields (p^e <= 64), applied when a
// job asks for e > 1 without supplying one.
std::vector<uint32_t> default_modulus(uint32_t p, uint32_t e);

int run_job(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace mcode
