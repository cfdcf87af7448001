#include "wittforge/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace wittforge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    for (int p : parts_) {
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    for (int col = 1; col <= max_part(); ++col) {
        int rows = 0;
        for (int p : parts_)
            if (p >= col) ++rows;
        out.push_back(rows);
    }
    return Partition(std::move(out));
}

Int Partition::z_factor() const {
    Int z = 1;
    size_t i = 0;
    while (i < parts_.size()) {
        size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        unsigned long mult = j - i;
        Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(parts_[i]), mult);
        z *= pw * factorial(mult);
        i = j;
    }
    return z;
}

Partition Partition::scaled(int n) const {
    if (n < 1) throw std::invalid_argument("scale factor must be positive");
    std::vector<int> out = parts_;
    for (int& p : out) p *= n;
    return Partition(std::move(out));
}

Partition Partition::concat(const Partition& other) const {
    std::vector<int> out = parts_;
    out.insert(out.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(out));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size() || text[i] != '[') throw parse_error("partition must start with '['");
    ++i;
    std::vector<int> parts;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        while (true) {
            skip_ws();
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw parse_error("expected part in partition: " + text);
            parts.push_back(std::stoi(text.substr(start, i - start)));
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ']') {
                ++i;
                break;
            }
            throw parse_error("expected ',' or ']' in partition: " + text);
        }
    }
    skip_ws();
    if (i != text.size()) throw parse_error("trailing characters after partition: " + text);
    return Partition(std::move(parts));
}

namespace {

void emit_partitions(int n, int max_part, std::vector<int>& stack,
                     std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        stack.push_back(k);
        emit_partitions(n - k, k, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
    if (n > kMaxPartitionWeight)
        throw capacity_error("partitions_of: weight " + std::to_string(n) +
                             " exceeds cap " + std::to_string(kMaxPartitionWeight));
    std::vector<Partition> out;
    std::vector<int> stack;
    emit_partitions(n, n, stack, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int w = 0; w <= n; ++w) {
        auto block = partitions_of(w);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

}  // namespace wittforge
