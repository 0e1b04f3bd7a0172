#include "cyclopair/linalg_mod.hpp"

#include <algorithm>
#include <cmath>

namespace cyclopair {

std::vector<std::uint64_t> multiply(const ModMatrix& m, const std::vector<std::uint64_t>& v) {
    std::vector<std::uint64_t> out(m.rows, 0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        unsigned __int128 acc = 0;
        for (std::size_t j = 0; j < m.cols; ++j) {
            acc += static_cast<unsigned __int128>(m.at(i, j)) * v[j];
            if ((j & 63) == 63) acc %= m.modulus;
        }
        out[i] = static_cast<std::uint64_t>(acc % m.modulus);
    }
    return out;
}

KernelBasis kernel_mod_p(const ModMatrix& m) {
    const std::uint64_t p = m.modulus;
    require_odd_prime(p);

    std::vector<std::uint64_t> a = m.entries;
    const std::size_t rows = m.rows, cols = m.cols;
    auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return a[i * cols + j]; };

    std::vector<std::size_t> pivot_col;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < cols && pr < rows; ++col) {
        std::size_t sel = rows;
        for (std::size_t i = pr; i < rows; ++i)
            if (at(i, col) != 0) { sel = i; break; }
        if (sel == rows) continue;
        if (sel != pr)
            std::swap_ranges(a.begin() + sel * cols, a.begin() + (sel + 1) * cols,
                             a.begin() + pr * cols);
        std::uint64_t inv = inv_mod(at(pr, col), p);
        for (std::size_t j = col; j < cols; ++j)
            at(pr, j) = mul_mod(at(pr, j), inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr) continue;
            std::uint64_t f = at(i, col);
            if (f == 0) continue;
            // a[i] += f * (p - a[pr]); products stay below 2^63 for p < 10^5.
            if (p < (1ull << 31)) {
                for (std::size_t j = col; j < cols; ++j) {
                    std::uint64_t neg = p - at(pr, j);
                    at(i, j) = (at(i, j) + f * (neg == p ? 0 : neg)) % p;
                }
            } else {
                for (std::size_t j = col; j < cols; ++j)
                    at(i, j) = sub_mod(at(i, j), mul_mod(f, at(pr, j), p), p);
            }
        }
        pivot_col.push_back(col);
        ++pr;
    }

    KernelBasis basis;
    basis.modulus = p;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::uint64_t> v(cols, 0);
        v[f] = 1;
        for (std::size_t k = 0; k < pivot_col.size(); ++k) {
            std::uint64_t e = at(k, f);
            v[pivot_col[k]] = e == 0 ? 0 : p - e;
        }
        basis.vectors.push_back(std::move(v));
        basis.annihilator_exponents.push_back(1);
    }
    return basis;
}

namespace {

enum class ColState { Active, UnitPivot, PPivot };

} // namespace

KernelBasis solution_module_mod_p2(const ModMatrix& m) {
    const std::uint64_t mod = m.modulus;
    std::uint64_t p = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(mod))));
    while (p * p > mod) --p;
    while ((p + 1) * (p + 1) <= mod) ++p;
    if (p * p != mod || p == 2 || !is_prime(p))
        throw ModulusNotSquareOfPrime("modulus " + std::to_string(mod) +
                                      " is not the square of an odd prime");

    const std::size_t rows = m.rows, cols = m.cols;
    std::vector<std::uint64_t> a = m.entries;
    auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return a[i * cols + j]; };

    // Column transform: solutions of the diagonalized system map back through v.
    std::vector<std::uint64_t> vt(cols * cols, 0);
    auto vat = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return vt[i * cols + j]; };
    for (std::size_t j = 0; j < cols; ++j) vat(j, j) = 1;

    std::vector<bool> row_active(rows, true);
    std::vector<ColState> col_state(cols, ColState::Active);

    auto clear_pivot = [&](std::size_t pi, std::size_t pj) {
        // Row ops clear column pj; the pivot entry divides every remaining
        // entry in its column at this stage.
        std::uint64_t pivot = at(pi, pj);
        for (std::size_t k = 0; k < rows; ++k) {
            if (k == pi || at(k, pj) == 0) continue;
            std::uint64_t f;
            if (pivot == 1) {
                f = at(k, pj);
            } else { // pivot == p, entry == p*w
                f = at(k, pj) / p;
            }
            for (std::size_t l = 0; l < cols; ++l)
                at(k, l) = sub_mod(at(k, l), mul_mod(f, at(pi, l), mod), mod);
        }
        // Column ops clear row pi; other rows hold 0 in column pj now,
        // so only row pi and the transform change.
        for (std::size_t l = 0; l < cols; ++l) {
            if (l == pj || at(pi, l) == 0) continue;
            std::uint64_t c = pivot == 1 ? at(pi, l) : at(pi, l) / p;
            for (std::size_t k = 0; k < cols; ++k)
                vat(k, l) = sub_mod(vat(k, l), mul_mod(c, vat(k, pj), mod), mod);
            at(pi, l) = 0;
        }
    };

    // Phase 1: unit pivots.
    for (;;) {
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = 0; i < rows && pi == rows; ++i) {
            if (!row_active[i]) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (col_state[j] != ColState::Active) continue;
                if (at(i, j) % p != 0) { pi = i; pj = j; break; }
            }
        }
        if (pi == rows) break;
        std::uint64_t inv = inv_mod(at(pi, pj), mod);
        for (std::size_t l = 0; l < cols; ++l)
            at(pi, l) = mul_mod(at(pi, l), inv, mod);
        clear_pivot(pi, pj);
        row_active[pi] = false;
        col_state[pj] = ColState::UnitPivot;
    }

    // Phase 2: every remaining active entry is p times a unit or zero.
    for (;;) {
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = 0; i < rows && pi == rows; ++i) {
            if (!row_active[i]) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (col_state[j] != ColState::Active) continue;
                if (at(i, j) != 0) { pi = i; pj = j; break; }
            }
        }
        if (pi == rows) break;
        std::uint64_t u = at(pi, pj) / p;
        std::uint64_t inv = inv_mod(u, mod);
        for (std::size_t l = 0; l < cols; ++l)
            at(pi, l) = mul_mod(at(pi, l), inv, mod);
        clear_pivot(pi, pj);
        row_active[pi] = false;
        col_state[pj] = ColState::PPivot;
    }

    KernelBasis out;
    out.modulus = mod;
    for (std::size_t j = 0; j < cols; ++j) {
        if (col_state[j] == ColState::UnitPivot) continue;
        std::vector<std::uint64_t> gen(cols);
        bool scale_p = col_state[j] == ColState::PPivot;
        for (std::size_t k = 0; k < cols; ++k)
            gen[k] = scale_p ? mul_mod(p, vat(k, j), mod) : vat(k, j);
        out.vectors.push_back(std::move(gen));
        out.annihilator_exponents.push_back(scale_p ? 1 : 2);
    }
    return out;
}

} // namespace cyclopair
