#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qap/rng.hpp"

namespace qap {

enum class InstanceShape { general, symmetric_zero_diag };

// Location -> facility assignment: assign[x] is the facility at location x.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n);                        // identity
    explicit Permutation(std::vector<int> assign);      // validated bijection
    static Permutation random(int n, RngState& rng);    // Fisher-Yates

    int size() const { return static_cast<int>(assign_.size()); }
    int operator[](int loc) const { return assign_[static_cast<std::size_t>(loc)]; }
    void swap(int p, int q);
    const std::vector<int>& assign() const { return assign_; }
    bool operator==(const Permutation& other) const { return assign_ == other.assign_; }

private:
    std::vector<int> assign_;
};

// Integer QAP instance: n x n distance and flow matrices. Entries are 32-bit;
// all cost/delta arithmetic runs at 64 bits, so the constructor rejects any
// instance where n^2 * max|d| * max|f| could exceed the signed 64-bit range.
class QapInstance {
public:
    QapInstance(int n, std::vector<std::int32_t> dist, std::vector<std::int32_t> flow,
                std::string name = "");

    int n() const { return n_; }
    const std::string& name() const { return name_; }

    std::int32_t dist(int i, int j) const { return dist_[idx(i, j)]; }
    std::int32_t flow(int a, int b) const { return flow_[idx(a, b)]; }
    const std::int32_t* dist_row(int i) const { return dist_.data() + idx(i, 0); }
    const std::int32_t* flow_row(int a) const { return flow_.data() + idx(a, 0); }
    const std::vector<std::int32_t>& dist_data() const { return dist_; }
    const std::vector<std::int32_t>& flow_data() const { return flow_; }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::string name_;
    std::vector<std::int32_t> dist_;
    std::vector<std::int32_t> flow_;
};

// QAPLIB text: n, then n^2 entries of the first matrix, then n^2 of the
// second, whitespace-separated. By default the first matrix is the distance
// matrix; swap_matrix_roles flips that for files using the other convention.
QapInstance parse_qaplib(std::istream& in, bool swap_matrix_roles = false,
                         std::string name = "");
QapInstance parse_qaplib(const std::string& text, bool swap_matrix_roles = false,
                         std::string name = "");
std::string to_qaplib(const QapInstance& inst);

QapInstance random_instance(int n, std::int32_t max_entry, std::uint64_t seed,
                            InstanceShape shape, std::string name = "");

}  // namespace qap
