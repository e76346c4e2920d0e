#pragma once

#include "diagcell/algebra.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace diagcell {

enum class GeneratorMode {
    greedy,      // a kernel vector becomes a generator only if it lies outside the submodule so far
    all_kernel,  // every kernel basis vector becomes a generator
    prune,       // greedy, then drop generators the others already generate
};

struct TorOptions {
    std::size_t qmax = 3;
    GeneratorMode mode = GeneratorMode::greedy;
    bool reversed = false;  // scan kernel vectors last to first
    // Bound on g_k * dim(A); 0 picks 2e6 over F_p and 1e5 over Q.
    std::size_t cap = 0;
    bool check_complex = true;
};

struct TorReport {
    std::string ring;
    std::size_t qmax = 0;
    std::vector<std::size_t> dims;        // Tor_0 .. Tor_qmax, or fewer when partial
    std::vector<std::size_t> generators;  // g_0, g_1, ...
    std::vector<std::size_t> kernel_dims; // dim K_0, dim K_1, ...
    std::vector<std::size_t> t_ranks;     // rank of d_k tensored down, k >= 1
    bool partial = false;
    bool complex_ok = true;  // d d = 0 and aug d_1 = 0 on every generator checked
    std::string note;

    std::string to_string() const;
};

// Tor_q^A(k, k) through a free resolution of k with exact kernels.
TorReport tor_dims(const StructureAlgebra& a, const TorOptions& opts = {});

// Tor over the group algebra of C_n from the 2-periodic resolution.
TorReport cyclic_group_oracle(std::size_t n, const Ring& ring, std::size_t qmax);

// Equal on the degrees both reports cover.
bool same_dims(const TorReport& x, const TorReport& y);

}  // namespace diagcell
