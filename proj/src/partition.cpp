#include "bnharm/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bnharm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must decrease weakly");
    }
}

Partition Partition::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty partition literal");
    if (s == "0") return {};
    std::vector<int> parts;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition: " + s);
        }
        if (pos != tok.size())
            throw std::invalid_argument("malformed partition: " + s);
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<size_t>(i - 1)];
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> t(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[static_cast<size_t>(j)];
    return Partition(std::move(t));
}

bool preceq(const Partition& mu, const Partition& lambda) {
    if (mu.weight() != lambda.weight()) return false;
    int len = std::max(mu.length(), lambda.length());
    for (int i = 2; i <= len; ++i)
        if (lambda.part(i) > mu.part(i)) return false;
    return true;
}

bool contains(const Partition& nu, const Partition& lambda) {
    for (int i = 1; i <= nu.length(); ++i)
        if (nu.part(i) > lambda.part(i)) return false;
    return true;
}

bool canonical_less(const Partition& a, const Partition& b) {
    if (a.length() != b.length()) return a.length() > b.length();
    return a.parts() < b.parts();
}

namespace {

void gen_partitions(int remaining, int max_part, int slots,
                    std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (slots == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        gen_partitions(remaining - p, p, slots - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int N, bool tilde_only) {
    if (n < 0 || N < 1) throw std::invalid_argument("enumerate_partitions");
    std::vector<Partition> all;
    std::vector<int> prefix;
    gen_partitions(n, n, N, prefix, all);
    if (tilde_only) {
        std::erase_if(all, [](const Partition& p) {
            return p.part(1) != p.part(2);
        });
    }
    std::sort(all.begin(), all.end(), canonical_less);
    return all;
}

Integer m_at_ones(const Partition& lambda, int N) {
    if (lambda.length() > N)
        throw std::invalid_argument("m_at_ones: partition longer than N");
    std::map<int, int> mult;
    for (int p : lambda.parts()) ++mult[p];
    mult[0] = N - lambda.length();
    Integer result = factorial(static_cast<unsigned long>(N));
    for (const auto& [value, count] : mult) {
        (void)value;
        result /= factorial(static_cast<unsigned long>(count));
    }
    return result;
}

Integer count_tilde(int n, int N) {
    if (n < 0) return 0;
    std::vector<Integer> ways(static_cast<size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int j = 2; j <= N; ++j)
        for (int k = j; k <= n; ++k)
            ways[static_cast<size_t>(k)] += ways[static_cast<size_t>(k - j)];
    return ways[static_cast<size_t>(n)];
}

Integer partition_factorial(const Partition& lambda) {
    Integer result = 1;
    for (int p : lambda.parts())
        result *= factorial(static_cast<unsigned long>(p));
    return result;
}

Rational pochhammer(const Rational& t, const Partition& lambda) {
    Rational result = 1;
    for (int p : lambda.parts())
        result *= pochhammer(t, static_cast<unsigned long>(p));
    return result;
}

}  // namespace bnharm
