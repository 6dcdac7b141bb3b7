#include "bnharm/matrix.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace bnharm {

RatMatrix::RatMatrix(std::vector<Partition> row_labels,
                     std::vector<Partition> col_labels)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
    entries_.assign(row_labels_.size(),
                    std::vector<Rational>(col_labels_.size(), Rational(0)));
}

Rational& RatMatrix::at(int i, int j) {
    return entries_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

const Rational& RatMatrix::at(int i, int j) const {
    return entries_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

int RatMatrix::row_index(const Partition& label) const {
    auto it = std::find(row_labels_.begin(), row_labels_.end(), label);
    if (it == row_labels_.end())
        throw std::invalid_argument("RatMatrix: unknown row label " +
                                    label.str());
    return static_cast<int>(it - row_labels_.begin());
}

const Rational& RatMatrix::at(const Partition& row,
                              const Partition& col) const {
    auto it = std::find(col_labels_.begin(), col_labels_.end(), col);
    if (it == col_labels_.end())
        throw std::invalid_argument("RatMatrix: unknown column label " +
                                    col.str());
    return at(row_index(row), static_cast<int>(it - col_labels_.begin()));
}

RatMatrix RatMatrix::multiply(const RatMatrix& other) const {
    if (cols() != other.rows())
        throw std::invalid_argument("RatMatrix::multiply: shape mismatch");
    RatMatrix result(row_labels_, other.col_labels_);
    for (int i = 0; i < rows(); ++i)
        for (int k = 0; k < cols(); ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < other.cols(); ++j)
                result.at(i, j) += a * other.at(k, j);
        }
    return result;
}

RatMatrix RatMatrix::inverse() const {
    if (rows() != cols())
        throw std::invalid_argument("RatMatrix::inverse: not square");
    const int n = rows();
    auto work = entries_;
    // Augment with the identity; labels of the inverse swap rows/columns.
    std::vector<std::vector<Rational>> inv(
        static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) inv[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (work[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::domain_error("RatMatrix::inverse: singular");
        std::swap(work[static_cast<size_t>(pivot)], work[static_cast<size_t>(col)]);
        std::swap(inv[static_cast<size_t>(pivot)], inv[static_cast<size_t>(col)]);
        Rational p = work[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (int j = 0; j < n; ++j) {
            work[static_cast<size_t>(col)][static_cast<size_t>(j)] /= p;
            inv[static_cast<size_t>(col)][static_cast<size_t>(j)] /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Rational f = work[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) {
                work[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
                    f * work[static_cast<size_t>(col)][static_cast<size_t>(j)];
                inv[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
                    f * inv[static_cast<size_t>(col)][static_cast<size_t>(j)];
            }
        }
    }
    RatMatrix result(row_labels_, col_labels_);
    result.entries_ = std::move(inv);
    return result;
}

Rational RatMatrix::determinant() const {
    if (rows() != cols())
        throw std::invalid_argument("RatMatrix::determinant: not square");
    auto work = entries_;
    const int n = rows();
    Rational det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (work[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(work[static_cast<size_t>(pivot)], work[static_cast<size_t>(col)]);
            det = -det;
        }
        const Rational& p = work[static_cast<size_t>(col)][static_cast<size_t>(col)];
        det *= p;
        for (int r = col + 1; r < n; ++r) {
            Rational f = work[static_cast<size_t>(r)][static_cast<size_t>(col)] / p;
            if (f == 0) continue;
            for (int j = col; j < n; ++j)
                work[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
                    f * work[static_cast<size_t>(col)][static_cast<size_t>(j)];
        }
    }
    return det;
}

bool RatMatrix::is_identity() const {
    if (rows() != cols()) return false;
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

RatMatrix matrix_A(int n, int N) {
    auto labels = enumerate_partitions(n, N, false);
    RatMatrix A(labels, labels);
    for (int col = 0; col < A.cols(); ++col) {
        SymPoly column = mtilde(labels[static_cast<size_t>(col)], N);
        for (const auto& [mu, c] : column.terms())
            A.at(A.row_index(mu), col) = c;
    }
    return A;
}

RatMatrix matrix_B_by_inversion(int n, int N) {
    return matrix_A(n, N).inverse();
}

const RatMatrix& transition_B(int n, int N) {
    static std::map<std::pair<int, int>, RatMatrix> cache;
    auto key = std::make_pair(n, N);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, matrix_B_by_inversion(n, N)).first;
    return it->second;
}

namespace {

// Parts 2, 3, ... of p as a partition, with delta added to the (possibly
// implicit) second part and the result resorted. Returns nothing when a
// part goes negative; the corresponding coefficient is then zero.
std::optional<Partition> dropped_head(const Partition& p, int delta) {
    std::vector<int> t;
    for (int i = 2; i <= p.length(); ++i) t.push_back(p.part(i));
    if (delta != 0) {
        if (t.empty()) t.push_back(0);
        t[0] += delta;
        std::sort(t.rbegin(), t.rend());
        if (!t.empty() && t.back() < 0) return std::nullopt;
    }
    return Partition(std::move(t));
}

}  // namespace

Rational matrix_B_closed(const Partition& mu, const Partition& lambda) {
    if (mu.weight() != lambda.weight())
        throw std::invalid_argument("matrix_B_closed: weight mismatch");
    Partition lambda_tail = *dropped_head(lambda, 0);
    Partition mu_tail = *dropped_head(mu, 0);
    std::optional<Partition> mu_drop = dropped_head(mu, -1);

    Rational sum = 0;
    Integer c1 = binomial(lambda.part(1) - mu.part(2),
                          mu.part(1) - mu.part(2));
    if (c1 != 0 && mu_tail.weight() >= lambda_tail.weight())
        sum += Rational(c1 * e1_coeff(mu_tail, lambda_tail));
    Integer c2 = binomial(lambda.part(1) - mu.part(2) - 1,
                          mu.part(1) - mu.part(2));
    if (c2 != 0 && mu_drop && mu_drop->weight() >= lambda_tail.weight())
        sum += Rational(c2 * e1_coeff(*mu_drop, lambda_tail));
    if ((lambda.part(1) - mu.part(1)) % 2 != 0) sum = -sum;
    return sum;
}

Rational bsym0_check(const Partition& lambda,
                     const std::function<Rational(std::span<const int>)>& g,
                     int N) {
    const int n = lambda.weight();
    RatMatrix B = matrix_B_by_inversion(n, std::max(N, lambda.length()));
    Rational sum = 0;
    for (const auto& mu : B.col_labels()) {
        if (!preceq(lambda, mu)) continue;
        std::vector<int> padded(static_cast<size_t>(N), 0);
        std::copy(mu.parts().begin(), mu.parts().end(), padded.begin());
        Rational term = B.at(lambda, mu) / Rational(partition_factorial(mu));
        sum += term * g(padded);
    }
    return sum;
}

}  // namespace bnharm
