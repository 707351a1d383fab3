#include "qap/instance.hpp"

#include <cstdlib>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qap {

Permutation::Permutation(int n) {
    if (n < 0) throw std::invalid_argument("permutation size must be non-negative");
    assign_.resize(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) assign_[static_cast<std::size_t>(x)] = x;
}

Permutation::Permutation(std::vector<int> assign) : assign_(std::move(assign)) {
    const int n = size();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : assign_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("assignment is not a bijection");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::random(int n, RngState& rng) {
    Permutation p(n);
    for (int x = n - 1; x >= 1; --x) {
        const auto y = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(x) + 1));
        std::swap(p.assign_[static_cast<std::size_t>(x)], p.assign_[static_cast<std::size_t>(y)]);
    }
    return p;
}

void Permutation::swap(int p, int q) {
    std::swap(assign_[static_cast<std::size_t>(p)], assign_[static_cast<std::size_t>(q)]);
}

namespace {

std::int64_t max_abs(const std::vector<std::int32_t>& m) {
    std::int64_t best = 0;
    for (std::int32_t v : m) {
        const std::int64_t a = v < 0 ? -static_cast<std::int64_t>(v) : v;
        if (a > best) best = a;
    }
    return best;
}

}  // namespace

QapInstance::QapInstance(int n, std::vector<std::int32_t> dist,
                         std::vector<std::int32_t> flow, std::string name)
    : n_(n), name_(std::move(name)), dist_(std::move(dist)), flow_(std::move(flow)) {
    if (n_ < 2) throw std::invalid_argument("instance size must be at least 2");
    const auto expect = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_);
    if (dist_.size() != expect || flow_.size() != expect)
        throw std::invalid_argument("matrix size does not match n");
    // 64-bit safety: the full cost sums n^2 products of one distance and one
    // flow entry, so n^2 * max|d| * max|f| must stay below 2^63.
    const __int128 bound = static_cast<__int128>(n_) * n_ * max_abs(dist_) * max_abs(flow_);
    if (bound > static_cast<__int128>(std::numeric_limits<std::int64_t>::max()))
        throw std::invalid_argument("instance exceeds the 64-bit cost bound");
}

namespace {

std::int64_t read_int(std::istream& in, const char* what) {
    std::int64_t v = 0;
    if (!(in >> v)) {
        std::string token;
        in.clear();
        if (in >> token)
            throw std::runtime_error(std::string("bad token while reading ") + what +
                                     ": '" + token + "'");
        throw std::runtime_error(std::string("unexpected end of input while reading ") + what);
    }
    return v;
}

std::int32_t read_entry(std::istream& in, const char* what) {
    const std::int64_t v = read_int(in, what);
    if (v < std::numeric_limits<std::int32_t>::min() ||
        v > std::numeric_limits<std::int32_t>::max())
        throw std::runtime_error(std::string(what) + " entry out of 32-bit range");
    return static_cast<std::int32_t>(v);
}

}  // namespace

QapInstance parse_qaplib(std::istream& in, bool swap_matrix_roles, std::string name) {
    const std::int64_t n64 = read_int(in, "instance size");
    if (n64 < 2) throw std::runtime_error("instance size must be at least 2");
    if (n64 > 46340) throw std::runtime_error("instance size is implausibly large");
    const int n = static_cast<int>(n64);
    const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);

    std::vector<std::int32_t> first(nn), second(nn);
    for (auto& v : first) v = read_entry(in, "first matrix");
    for (auto& v : second) v = read_entry(in, "second matrix");
    std::string extra;
    if (in >> extra) throw std::runtime_error("trailing token after matrices: '" + extra + "'");

    if (swap_matrix_roles) first.swap(second);
    return QapInstance(n, std::move(first), std::move(second), std::move(name));
}

QapInstance parse_qaplib(const std::string& text, bool swap_matrix_roles, std::string name) {
    std::istringstream in(text);
    return parse_qaplib(in, swap_matrix_roles, std::move(name));
}

std::string to_qaplib(const QapInstance& inst) {
    std::ostringstream out;
    const int n = inst.n();
    out << n << "\n\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out << (j ? " " : "") << inst.dist(i, j);
        out << "\n";
    }
    out << "\n";
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) out << (b ? " " : "") << inst.flow(a, b);
        out << "\n";
    }
    return out.str();
}

QapInstance random_instance(int n, std::int32_t max_entry, std::uint64_t seed,
                            InstanceShape shape, std::string name) {
    if (n < 2) throw std::invalid_argument("instance size must be at least 2");
    if (max_entry < 1) throw std::invalid_argument("max_entry must be at least 1");
    const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    std::vector<std::int32_t> dist(nn, 0), flow(nn, 0);
    RngState rng(seed);
    const auto draw = [&] {
        return static_cast<std::int32_t>(rng.next_below(static_cast<std::uint64_t>(max_entry) + 1));
    };
    if (shape == InstanceShape::general) {
        for (auto& v : dist) v = draw();
        for (auto& v : flow) v = draw();
    } else {
        for (auto* m : {&dist, &flow}) {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    const std::int32_t v = draw();
                    (*m)[static_cast<std::size_t>(i) * n + j] = v;
                    (*m)[static_cast<std::size_t>(j) * n + i] = v;
                }
        }
    }
    return QapInstance(n, std::move(dist), std::move(flow), std::move(name));
}

}  // namespace qap
