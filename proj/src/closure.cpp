#include "hypcert/closure.hpp"

#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace hypcert {

namespace {

struct IntMatrix {
    std::size_t n = 0;
    std::vector<CyclotomicInteger> e;
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r{a.n, std::vector<CyclotomicInteger>(a.n * a.n, CyclotomicInteger(a.e[0].conductor(), 0))};
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t k = 0; k < a.n; ++k) {
            const auto& x = a.e[i * a.n + k];
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < a.n; ++j) r.e[i * a.n + j] += x * b.e[k * a.n + j];
        }
    return r;
}

struct IntMatrixHash {
    std::size_t operator()(const IntMatrix& m) const noexcept {
        std::size_t h = m.n;
        std::hash<CyclotomicInteger> hc;
        for (const auto& x : m.e) h = h * 1000003u ^ hc(x);
        return h;
    }
};

long common_conductor(const std::vector<CyclotomicMatrix>& gens) {
    long m = 1;
    for (const auto& g : gens) m = lcm(m, conductor_of(g));
    return m;
}

std::optional<IntMatrix> to_int(const CyclotomicMatrix& g, long m) {
    IntMatrix r{g.rows(), {}};
    for (const auto& x : g.entries()) {
        auto v = CyclotomicInteger::from(x, m);
        if (!v) return std::nullopt;
        r.e.push_back(*v);
    }
    return r;
}

std::string matrix_key(const CyclotomicMatrix& g) {
    std::string k;
    for (const auto& x : g.entries()) k += x.key() + ";";
    return k;
}

template <class M, class Set>
ClosureResult closure_bfs(const std::vector<M>& gens, const M& id, std::size_t cap) {
    Set seen;
    std::deque<M> frontier{id};
    seen.insert(id);
    while (!frontier.empty()) {
        M x = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : gens) {
            M y = x * g;
            if (seen.insert(y).second) {
                if (seen.size() > cap) return {false, seen.size(), false};
                frontier.push_back(std::move(y));
            }
        }
    }
    return {true, seen.size(), false};
}

struct KeyedMatrix {
    CyclotomicMatrix m;
    long conductor;
    std::string key;
    KeyedMatrix(CyclotomicMatrix g, long c) : m(lift_matrix(g, c)), conductor(c), key(matrix_key(m)) {}
    friend KeyedMatrix operator*(const KeyedMatrix& a, const KeyedMatrix& b) { return {a.m * b.m, a.conductor}; }
    friend bool operator==(const KeyedMatrix& a, const KeyedMatrix& b) { return a.key == b.key; }
};

struct KeyedHash {
    std::size_t operator()(const KeyedMatrix& k) const noexcept { return std::hash<std::string>()(k.key); }
};

}  // namespace

CyclotomicMatrix lift_matrix(const CyclotomicMatrix& g, long m) {
    std::vector<CyclotomicNumber> e;
    e.reserve(g.entries().size());
    for (const auto& x : g.entries()) e.push_back(x.lifted(m));
    return CyclotomicMatrix(g.rows(), g.cols(), std::move(e));
}

ClosureResult group_closure(const std::vector<CyclotomicMatrix>& gens, std::size_t cap) {
    if (gens.empty()) return {true, 1, false};
    const std::size_t n = gens[0].rows();
    for (const auto& g : gens)
        if (g.rows() != n || g.cols() != n) throw DomainError("group_closure: generators must be square of equal size");
    const long m = common_conductor(gens);
    std::vector<IntMatrix> ig;
    bool integral = true;
    for (const auto& g : gens) {
        auto v = to_int(g, m);
        if (!v) {
            integral = false;
            break;
        }
        ig.push_back(std::move(*v));
    }
    if (integral) {
        try {
            auto id = *to_int(CyclotomicMatrix::identity(n), m);
            auto r = closure_bfs<IntMatrix, std::unordered_set<IntMatrix, IntMatrixHash>>(ig, id, cap);
            r.used_fast_path = true;
            return r;
        } catch (const std::overflow_error&) {
            // entries outgrew 64 bits; redo exactly
        }
    }
    std::vector<KeyedMatrix> kg;
    for (const auto& g : gens) kg.emplace_back(g, m);
    return closure_bfs<KeyedMatrix, std::unordered_set<KeyedMatrix, KeyedHash>>(
        kg, KeyedMatrix(CyclotomicMatrix::identity(n), m), cap);
}

bool spans_full_matrix_algebra(const std::vector<CyclotomicMatrix>& gens) {
    if (gens.empty()) throw DomainError("spans_full_matrix_algebra: empty tuple");
    const std::size_t n = gens[0].rows();
    const std::size_t dim = n * n;
    using V = std::vector<CyclotomicNumber>;
    std::vector<V> basis;                 // reduced, with leading 1 at pivot
    std::vector<std::size_t> pivots;
    std::deque<CyclotomicMatrix> queue;

    auto try_add = [&](const CyclotomicMatrix& m) {
        V v(m.entries().begin(), m.entries().end());
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const auto c = v[pivots[b]];
            if (is_zero(c)) continue;
            for (std::size_t j = 0; j < dim; ++j) v[j] = v[j] - c * basis[b][j];
        }
        std::size_t p = 0;
        while (p < dim && is_zero(v[p])) ++p;
        if (p == dim) return false;
        const auto inv = CyclotomicNumber(1) / v[p];
        for (auto& x : v) x = x * inv;
        for (auto& row : basis) {
            const auto c = row[p];
            if (is_zero(c)) continue;
            for (std::size_t j = 0; j < dim; ++j) row[j] = row[j] - c * v[j];
        }
        basis.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    };

    const auto id = CyclotomicMatrix::identity(n);
    try_add(id);
    queue.push_back(id);
    while (!queue.empty() && basis.size() < dim) {
        auto x = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            auto y = x * g;
            if (try_add(y)) queue.push_back(std::move(y));
        }
    }
    return basis.size() == dim;
}

WordEnumerator::WordEnumerator(const std::vector<CyclotomicMatrix>& gens) {
    if (gens.empty()) throw DomainError("word enumeration needs at least one generator");
    conductor_ = common_conductor(gens);
    for (const auto& g : gens) {
        letters_.push_back(lift_matrix(g, conductor_));
        letters_.push_back(lift_matrix(inverse(g), conductor_));
    }
}

const std::vector<CyclotomicMatrix>& WordEnumerator::next_layer() {
    std::vector<CyclotomicMatrix> next;
    if (length_ < 0) {
        auto id = lift_matrix(CyclotomicMatrix::identity(letters_[0].rows()), conductor_);
        seen_.insert(matrix_key(id));
        next.push_back(std::move(id));
    } else {
        for (const auto& w : layer_)
            for (const auto& l : letters_) {
                auto y = lift_matrix(w * l, conductor_);
                if (seen_.insert(matrix_key(y)).second) next.push_back(std::move(y));
            }
    }
    layer_ = std::move(next);
    ++length_;
    return layer_;
}

std::vector<std::vector<CyclotomicMatrix>> word_layers(const std::vector<CyclotomicMatrix>& gens, int max_len) {
    WordEnumerator en(gens);
    std::vector<std::vector<CyclotomicMatrix>> layers;
    for (int len = 0; len <= max_len; ++len) layers.push_back(en.next_layer());
    return layers;
}

std::vector<CyclotomicMatrix> words_up_to(const std::vector<CyclotomicMatrix>& gens, int max_len) {
    std::vector<CyclotomicMatrix> out;
    for (auto& layer : word_layers(gens, max_len))
        for (auto& w : layer) out.push_back(std::move(w));
    return out;
}

}  // namespace hypcert
