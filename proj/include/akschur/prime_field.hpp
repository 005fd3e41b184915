#pragma once

// Arithmetic mod a 61-bit prime and dense linear algebra over F_p.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace akschur {

// 2^61 - 1.
inline constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t modinv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("inverse of zero mod p");
    return powmod(a, p - 2, p);
}

inline bool is_probable_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % sp == 0) return n == sp;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Residue carrying its modulus. A default-constructed value (p == 0) is a modulus-free zero
// that adopts the other operand's modulus.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    static Fp from_int(long long c, std::uint64_t p) {
        long long r = static_cast<long long>(static_cast<__int128>(c) % static_cast<__int128>(p));
        if (r < 0) r += static_cast<long long>(p);
        return {static_cast<std::uint64_t>(r), p};
    }

    template <class Int>
    static Fp from_integer(const Int& c, std::uint64_t p) {
        Int r = c % Int(p);
        if (r < 0) r += Int(p);
        return {static_cast<std::uint64_t>(r), p};
    }

    bool is_zero() const { return v == 0; }

    friend Fp operator+(Fp a, Fp b) {
        std::uint64_t p = a.p ? a.p : b.p;
        std::uint64_t s = a.v + b.v;
        if (p && s >= p) s -= p;
        return {s, p};
    }
    friend Fp operator-(Fp a, Fp b) {
        std::uint64_t p = a.p ? a.p : b.p;
        std::uint64_t s = a.v >= b.v ? a.v - b.v : a.v + p - b.v;
        return {s, p};
    }
    Fp operator-() const { return {v ? p - v : 0, p}; }
    friend Fp operator*(Fp a, Fp b) {
        std::uint64_t p = a.p ? a.p : b.p;
        if (!p) return {};
        return {mulmod(a.v, b.v, p), p};
    }
    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }
    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
    friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }

    Fp inv() const { return {modinv(v, p), p}; }
    Fp pow(long long e) const {
        if (e < 0) return inv().pow(-e);
        return {powmod(v, static_cast<std::uint64_t>(e), p), p};
    }
    std::string to_string() const { return std::to_string(v); }
};

// Dense matrix over F_p, row-major.
class PrimeMatrix {
public:
    PrimeMatrix() = default;
    PrimeMatrix(std::size_t rows, std::size_t cols, std::uint64_t p)
        : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

    static PrimeMatrix identity(std::size_t n, std::uint64_t p) {
        PrimeMatrix m(n, n, p);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static PrimeMatrix from_rows(const std::vector<std::vector<std::uint64_t>>& rows, std::size_t cols,
                                 std::uint64_t p) {
        PrimeMatrix m(rows.size(), cols, p);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j] % p;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t prime() const { return p_; }

    std::uint64_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint64_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<std::uint64_t>& data() const { return a_; }

    std::vector<std::uint64_t> row(std::size_t i) const {
        return {a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    bool is_zero() const {
        for (auto x : a_)
            if (x) return false;
        return true;
    }

    friend bool operator==(const PrimeMatrix& a, const PrimeMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    friend PrimeMatrix operator+(const PrimeMatrix& a, const PrimeMatrix& b) {
        check_same(a, b);
        PrimeMatrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i) {
            std::uint64_t s = a.a_[i] + b.a_[i];
            c.a_[i] = s >= a.p_ ? s - a.p_ : s;
        }
        return c;
    }

    friend PrimeMatrix operator-(const PrimeMatrix& a, const PrimeMatrix& b) {
        check_same(a, b);
        PrimeMatrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i)
            c.a_[i] = a.a_[i] >= b.a_[i] ? a.a_[i] - b.a_[i] : a.a_[i] + a.p_ - b.a_[i];
        return c;
    }

    friend PrimeMatrix operator*(const PrimeMatrix& a, const PrimeMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("PrimeMatrix: shape mismatch in product");
        PrimeMatrix c(a.rows_, b.cols_, a.p_);
        std::vector<unsigned __int128> acc(b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t k = 0; k < a.cols_; ++k) {
                std::uint64_t x = a(i, k);
                if (!x) continue;
                const std::uint64_t* brow = &b.a_[k * b.cols_];
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    acc[j] += static_cast<unsigned __int128>(x) * brow[j];
                    // Keep the accumulator well inside 128 bits: p < 2^62 so each product < 2^124.
                    if (acc[j] >> 125) acc[j] %= a.p_;
                }
            }
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = static_cast<std::uint64_t>(acc[j] % a.p_);
        }
        return c;
    }

    PrimeMatrix scaled(std::uint64_t s) const {
        PrimeMatrix c = *this;
        for (auto& x : c.a_) x = mulmod(x, s, p_);
        return c;
    }

    PrimeMatrix transposed() const {
        PrimeMatrix t(cols_, rows_, p_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    // In-place reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t piv = r;
            while (piv < rows_ && (*this)(piv, c) == 0) ++piv;
            if (piv == rows_) continue;
            swap_rows(piv, r);
            std::uint64_t inv = modinv((*this)(r, c), p_);
            for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = mulmod((*this)(r, j), inv, p_);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                std::uint64_t f = (*this)(i, c);
                if (!f) continue;
                for (std::size_t j = c; j < cols_; ++j) {
                    std::uint64_t sub = mulmod(f, (*this)(r, j), p_);
                    std::uint64_t& x = (*this)(i, j);
                    x = x >= sub ? x - sub : x + p_ - sub;
                }
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        PrimeMatrix m = *this;
        return m.rref().size();
    }

    // Basis of {x : M x = 0}.
    std::vector<std::vector<std::uint64_t>> nullspace() const {
        PrimeMatrix m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<std::uint64_t>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<std::uint64_t> x(cols_, 0);
            x[free] = 1;
            for (std::size_t i = 0; i < pivots.size(); ++i) {
                std::uint64_t v = m(i, free);
                x[pivots[i]] = v ? p_ - v : 0;
            }
            basis.push_back(std::move(x));
        }
        return basis;
    }

    // Some x with M x = b, or nullopt when b is outside the column space.
    std::optional<std::vector<std::uint64_t>> solve(const std::vector<std::uint64_t>& b) const {
        if (b.size() != rows_) throw std::invalid_argument("PrimeMatrix::solve: rhs size");
        PrimeMatrix aug(rows_, cols_ + 1, p_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i] % p_;
        }
        auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<std::uint64_t> x(cols_, 0);
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, cols_);
        return x;
    }

    std::vector<std::uint64_t> apply(const std::vector<std::uint64_t>& x) const {
        std::vector<std::uint64_t> y(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i) {
            unsigned __int128 acc = 0;
            for (std::size_t j = 0; j < cols_; ++j) {
                acc += static_cast<unsigned __int128>((*this)(i, j)) * x[j];
                if (acc >> 125) acc %= p_;
            }
            y[i] = static_cast<std::uint64_t>(acc % p_);
        }
        return y;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::uint64_t p_ = 0;
    std::vector<std::uint64_t> a_;

    static void check_same(const PrimeMatrix& a, const PrimeMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("PrimeMatrix: shape mismatch");
    }
};

// Incrementally grown row space with a fully reduced echelon basis.
class SpanBuilder {
public:
    SpanBuilder(std::size_t dim, std::uint64_t p) : dim_(dim), p_(p) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }

    // Reduces v against the basis in place; returns the index of its first nonzero entry
    // or dim() when v lies in the span.
    std::size_t reduce(std::vector<std::uint64_t>& v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            std::uint64_t f = v[pivots_[k]];
            if (!f) continue;
            const auto& r = rows_[k];
            for (std::size_t j = pivots_[k]; j < dim_; ++j) {
                if (!r[j]) continue;
                std::uint64_t sub = mulmod(f, r[j], p_);
                v[j] = v[j] >= sub ? v[j] - sub : v[j] + p_ - sub;
            }
        }
        for (std::size_t j = 0; j < dim_; ++j)
            if (v[j]) return j;
        return dim_;
    }

    bool contains(std::vector<std::uint64_t> v) const { return reduce(v) == dim_; }

    // Adds v; returns true when it enlarged the span.
    bool add(std::vector<std::uint64_t> v) {
        std::size_t piv = reduce(v);
        if (piv == dim_) return false;
        std::uint64_t inv = modinv(v[piv], p_);
        for (std::size_t j = piv; j < dim_; ++j) v[j] = mulmod(v[j], inv, p_);
        for (auto& r : rows_) {
            std::uint64_t f = r[piv];
            if (!f) continue;
            for (std::size_t j = piv; j < dim_; ++j) {
                if (!v[j]) continue;
                std::uint64_t sub = mulmod(f, v[j], p_);
                r[j] = r[j] >= sub ? r[j] - sub : r[j] + p_ - sub;
            }
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

    const std::vector<std::vector<std::uint64_t>>& rows() const { return rows_; }

private:
    std::size_t dim_;
    std::uint64_t p_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::size_t> pivots_;
};

// Coordinates with respect to a fixed independent list of vectors.
class CoordSolver {
public:
    CoordSolver() = default;
    CoordSolver(const std::vector<std::vector<std::uint64_t>>& basis, std::size_t dim, std::uint64_t p)
        : dim_(dim), p_(p), k_(basis.size()) {
        // Row-reduce [B | I] to express each echelon row as a combination of the inputs.
        PrimeMatrix aug(k_, dim_ + k_, p_);
        for (std::size_t i = 0; i < k_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) aug(i, j) = basis[i][j] % p_;
            aug(i, dim_ + i) = 1;
        }
        auto piv = aug.rref();
        independent_ = true;
        for (std::size_t i = 0; i < k_; ++i)
            if (i >= piv.size() || piv[i] >= dim_) independent_ = false;
        if (!independent_) return;
        pivots_.assign(piv.begin(), piv.begin() + static_cast<std::ptrdiff_t>(k_));
        echelon_ = PrimeMatrix(k_, dim_, p_);
        combo_ = PrimeMatrix(k_, k_, p_);
        for (std::size_t i = 0; i < k_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) echelon_(i, j) = aug(i, j);
            for (std::size_t j = 0; j < k_; ++j) combo_(i, j) = aug(i, dim_ + j);
        }
    }

    bool independent() const { return independent_; }
    std::size_t size() const { return k_; }

    // c with v = sum_i c_i basis_i, or nullopt when v is not in the span.
    std::optional<std::vector<std::uint64_t>> coords(const std::vector<std::uint64_t>& v) const {
        if (!independent_) throw std::logic_error("CoordSolver: basis is dependent");
        // In echelon coordinates the pivot entries of v are the coefficients.
        std::vector<std::uint64_t> e(k_);
        std::vector<std::uint64_t> rest = v;
        for (std::size_t i = 0; i < k_; ++i) {
            e[i] = rest[pivots_[i]];
            if (!e[i]) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (!echelon_(i, j)) continue;
                std::uint64_t sub = mulmod(e[i], echelon_(i, j), p_);
                rest[j] = rest[j] >= sub ? rest[j] - sub : rest[j] + p_ - sub;
            }
        }
        for (auto x : rest)
            if (x) return std::nullopt;
        // echelon row i = sum_j combo(i, j) basis_j
        std::vector<std::uint64_t> c(k_, 0);
        for (std::size_t i = 0; i < k_; ++i) {
            if (!e[i]) continue;
            for (std::size_t j = 0; j < k_; ++j) {
                std::uint64_t add = mulmod(e[i], combo_(i, j), p_);
                c[j] = (c[j] + add) % p_;
            }
        }
        return c;
    }

private:
    std::size_t dim_ = 0;
    std::uint64_t p_ = 0;
    std::size_t k_ = 0;
    bool independent_ = false;
    std::vector<std::size_t> pivots_;
    PrimeMatrix echelon_, combo_;
};

}  // namespace akschur
