#include "cyclopair/bernoulli.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "cyclopair/errors.hpp"

namespace cyclopair {

namespace {

std::mutex g_exact_mutex;
std::vector<mpq_class> g_exact; // B_0, B_1, B_2, ... as far as computed

// Extends the memo table through index k using the defining recurrence
// B_k = -1/(k+1) * sum_{j<k} C(k+1,j) B_j.
void extend_exact(unsigned k) {
    if (g_exact.empty()) {
        g_exact.emplace_back(1);            // B_0
        g_exact.emplace_back(mpq_class(-1, 2)); // B_1
    }
    for (unsigned n = static_cast<unsigned>(g_exact.size()); n <= k; ++n) {
        if (n % 2 == 1) {
            g_exact.emplace_back(0);
            continue;
        }
        mpq_class sum = 0;
        mpz_class binom = 1; // C(n+1, j), updated incrementally
        for (unsigned j = 0; j < n; ++j) {
            if (j > 0) {
                binom *= (n + 2 - j);
                mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), j);
            }
            if (j <= 1 || j % 2 == 0)
                sum += mpq_class(binom) * g_exact[j];
        }
        mpq_class bk = -sum / mpq_class(n + 1);
        bk.canonicalize();
        g_exact.push_back(std::move(bk));
    }
}

} // namespace

mpq_class bernoulli_exact(unsigned k) {
    if (k > kBernoulliBound)
        throw BoundExceeded("Bernoulli index " + std::to_string(k) + " exceeds bound " +
                            std::to_string(kBernoulliBound));
    std::lock_guard<std::mutex> lock(g_exact_mutex);
    extend_exact(k);
    return g_exact[k];
}

Residue reduce_rational(const mpq_class& q, std::uint64_t p, int precision) {
    std::uint64_t m = precision == 1 ? p : p * p;
    mpz_class num = q.get_num();
    mpz_class den = q.get_den();
    std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), m);
    if (d % p == 0)
        throw NotInvertible("denominator divisible by " + std::to_string(p));
    std::uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), m); // fdiv: nonnegative result
    return Residue{mul_mod(n, inv_mod(d, m), m), m};
}

std::vector<std::uint64_t> bernoulli_mod_p_table(std::uint64_t p) {
    require_odd_prime(p);
    if (p == 3) return {1 % p}; // only B_0
    const std::size_t n_max = static_cast<std::size_t>(p - 3); // highest index needed
    // Factorials and inverse factorials through n_max + 1 < p.
    std::vector<std::uint64_t> fact(n_max + 2), inv_fact(n_max + 2);
    fact[0] = 1;
    for (std::size_t i = 1; i < fact.size(); ++i) fact[i] = mul_mod(fact[i - 1], i % p, p);
    inv_fact.back() = inv_mod(fact.back(), p);
    for (std::size_t i = fact.size() - 1; i > 0; --i)
        inv_fact[i - 1] = mul_mod(inv_fact[i], i % p, p);

    // c = inverse of the series sum_n t^n/(n+1)!, so B_n = n! c_n.
    std::vector<std::uint64_t> c(n_max + 1, 0);
    c[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        unsigned __int128 acc = 0;
        for (std::size_t k = 1; k <= n; ++k)
            acc += static_cast<unsigned __int128>(inv_fact[k + 1]) * c[n - k];
        std::uint64_t s = static_cast<std::uint64_t>(acc % p);
        c[n] = s == 0 ? 0 : p - s;
    }
    std::vector<std::uint64_t> table(n_max / 2 + 1);
    for (std::size_t k = 0; k <= n_max; k += 2)
        table[k / 2] = mul_mod(fact[k], c[k], p);
    return table;
}

Residue bernoulli_mod(unsigned k, std::uint64_t p, int precision) {
    require_odd_prime(p);
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("Bernoulli index must be even and >= 2");
    if (k % (p - 1) == 0)
        throw PoleAtIndex("B_" + std::to_string(k) + " has a pole mod " + std::to_string(p));
    if (precision == 1 && k <= p - 3) {
        static std::mutex table_mutex;
        static std::map<std::uint64_t, std::vector<std::uint64_t>> tables;
        std::lock_guard<std::mutex> lock(table_mutex);
        auto it = tables.find(p);
        if (it == tables.end())
            it = tables.emplace(p, bernoulli_mod_p_table(p)).first;
        return Residue{it->second[k / 2], p};
    }
    return reduce_rational(bernoulli_exact(k), p, precision);
}

bool is_irregular(std::uint64_t p, std::uint64_t r) {
    if (r < 2 || r > p - 3 || r % 2 != 0) return false;
    return bernoulli_mod(static_cast<unsigned>(r), p, 1).value == 0;
}

std::vector<IrregularPair> irregular_pairs(std::uint64_t p) {
    require_odd_prime(p);
    std::vector<IrregularPair> out;
    if (p < 5) return out;
    auto table = bernoulli_mod_p_table(p);
    for (std::uint64_t r = 2; r + 3 <= p; r += 2)
        if (table[r / 2] == 0) out.push_back({p, r});
    return out;
}

BernoulliCache::BernoulliCache(std::string path) : path_(std::move(path)) {}

void BernoulliCache::load() {
    if (path_.empty()) return;
    std::ifstream in(path_);
    if (!in) return; // absence triggers recomputation, never failure
    std::string line;
    if (!std::getline(in, line)) return; // empty file: fresh cache
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
        throw CacheCorrupt("cache header is not valid JSON: " + path_);
    }
    if (header.value("format", "") != "bernoulli-cache" || header.value("version", 0) != 1)
        throw CacheCorrupt("unrecognized cache header in " + path_);
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json rec;
        try {
            rec = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception&) {
            throw CacheCorrupt("malformed cache record at " + path_ + ":" +
                               std::to_string(lineno));
        }
        if (!rec.contains("p") || !rec.contains("prec") || !rec.contains("k") ||
            !rec.contains("value"))
            throw CacheCorrupt("incomplete cache record at " + path_ + ":" +
                               std::to_string(lineno));
        std::uint64_t p = rec["p"].get<std::uint64_t>();
        int prec = rec["prec"].get<int>();
        std::uint64_t k = rec["k"].get<std::uint64_t>();
        std::uint64_t value = rec["value"].get<std::uint64_t>();
        auto key = std::make_pair(p, prec);
        if (k == 0) {
            if (value != 1)
                throw CacheCorrupt("bad completion marker at " + path_ + ":" +
                                   std::to_string(lineno));
            scans_[key] = partial_[key];
            partial_.erase(key);
        } else if (value == 0) {
            partial_[key].push_back(k);
        }
    }
}

bool BernoulliCache::has_scan(std::uint64_t p, int prec) const {
    return scans_.count({p, prec}) > 0;
}

std::vector<std::uint64_t> BernoulliCache::irregular_indices(std::uint64_t p, int prec) const {
    auto it = scans_.find({p, prec});
    return it == scans_.end() ? std::vector<std::uint64_t>{} : it->second;
}

void BernoulliCache::record_scan(std::uint64_t p, int prec,
                                 const std::vector<std::uint64_t>& irregular_r) {
    if (path_.empty()) return;
    bool need_header = true;
    {
        std::ifstream probe(path_);
        std::string first;
        if (probe && std::getline(probe, first) && !first.empty()) need_header = false;
    }
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot open cache for append: " + path_);
    if (need_header)
        out << R"({"format": "bernoulli-cache", "version": 1})" << "\n";
    for (std::uint64_t r : irregular_r)
        out << "{\"p\": " << p << ", \"prec\": " << prec << ", \"k\": " << r
            << ", \"value\": 0}\n";
    out << "{\"p\": " << p << ", \"prec\": " << prec << ", \"k\": 0, \"value\": 1}\n";
    scans_[{p, prec}] = irregular_r;
}

std::map<std::uint64_t, std::vector<std::uint64_t>>
scan_irregular(std::uint64_t limit, BernoulliCache* cache, unsigned threads) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 3; p < limit; p += 2)
        if (is_prime(p)) primes.push_back(p);

    std::map<std::uint64_t, std::vector<std::uint64_t>> result;
    std::vector<std::uint64_t> todo;
    for (std::uint64_t p : primes) {
        if (cache && cache->has_scan(p, 1))
            result[p] = cache->irregular_indices(p, 1);
        else
            todo.push_back(p);
    }

    std::mutex merge_mutex;
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= todo.size()) break;
            std::uint64_t p = todo[i];
            std::vector<std::uint64_t> rs;
            for (const auto& pair : irregular_pairs(p)) rs.push_back(pair.r);
            std::lock_guard<std::mutex> lock(merge_mutex);
            result[p] = rs;
            if (cache) cache->record_scan(p, 1, rs); // single writer via the lock
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return result;
}

IwasawaCoeffs iwasawa_coeffs(const IrregularPair& pair) {
    const std::uint64_t p = pair.p, r = pair.r;
    require_odd_prime(p);
    if (!is_irregular(p, r))
        throw NotIrregular("(" + std::to_string(p) + ", " + std::to_string(r) +
                           ") is not an irregular pair");
    if (r + p - 1 > kBernoulliBound)
        throw BoundExceeded("index " + std::to_string(r + p - 1) + " exceeds exact bound");

    mpq_class br = bernoulli_exact(static_cast<unsigned>(r));
    mpq_class bnext = bernoulli_exact(static_cast<unsigned>(r + p - 1));

    // f(0) = ((r-2)/r) B_r - B_{r+p-1} and p f'(0) = B_r/r - B_{r+p-1}/(r-1),
    // both divisible by p exactly when (p, r) is irregular.
    mpq_class f0 = mpq_class(static_cast<unsigned long>(r - 2),
                             static_cast<unsigned long>(r)) * br - bnext;
    mpq_class pf1 = br / mpq_class(static_cast<unsigned long>(r)) -
                    bnext / mpq_class(static_cast<unsigned long>(r - 1));

    Residue x = reduce_rational(f0, p, 2);
    Residue y = reduce_rational(pf1, p, 2);
    if (x.value % p != 0 || y.value % p != 0)
        throw IntegralityFailure("Iwasawa coefficients not divisible by p for (" +
                                 std::to_string(p) + ", " + std::to_string(r) + ")");
    return IwasawaCoeffs{p, r, (x.value / p) % p, (y.value / p) % p};
}

} // namespace cyclopair
