#include "ccode/search.hpp"

#include <chrono>
#include <future>
#include <string>
#include <thread>

#include "ccode/errors.hpp"
#include "ccode/factorization.hpp"

namespace ccode {

namespace {

void check_length(int length) {
    if (length < 4 || length > 36 || length % 2 != 0) {
        throw BadLength("search supports even lengths 4..36, got " +
                        std::to_string(length));
    }
}

// Depth-first construction in lexicographic order: the smallest unused
// non-zero element is either paired with the smallest feasible partner or
// marked as the starter's absent element. Pairing sorts before skipping, and
// partners are tried in increasing order, so completed starters come out in
// canonical order and each is produced exactly once.
class StarterEnumerator {
  public:
    StarterEnumerator(int modulus, const std::function<bool(const EvenStarter&)>& fn)
        : modulus_(modulus), n_(modulus / 2), fn_(fn),
          used_(modulus, false), class_used_(modulus / 2, false) {}

    // Returns false when the callback asked to stop.
    bool run(int first_partner_lo, int first_partner_hi, bool skip_first) {
        if (skip_first) {
            absent_ = 1;
            used_[1] = true;
            return recurse(2);
        }
        if (!pair_feasible(first_partner_lo, first_partner_hi)) return true;
        push_pair(first_partner_lo, first_partner_hi);
        bool keep_going = recurse(2);
        pop_pair(first_partner_lo, first_partner_hi);
        return keep_going;
    }

    bool run_all() {
        for (int y = 2; y < modulus_; ++y) {
            if (!run(1, y, false)) return false;
        }
        return run(0, 0, true);
    }

  private:
    bool pair_feasible(int x, int y) const {
        if (used_[x] || used_[y]) return false;
        int c = class_of(x, y);
        return c != 0 && c != n_ && !class_used_[c];
    }

    int class_of(int x, int y) const {
        int d = mod(y - x, modulus_);
        return std::min(d, modulus_ - d);
    }

    void push_pair(int x, int y) {
        used_[x] = used_[y] = true;
        class_used_[class_of(x, y)] = true;
        pairs_.push_back({x, y});
    }

    void pop_pair(int x, int y) {
        used_[x] = used_[y] = false;
        class_used_[class_of(x, y)] = false;
        pairs_.pop_back();
    }

    bool recurse(int cursor) {
        int x = cursor;
        while (x < modulus_ && used_[x]) ++x;
        if (x == modulus_) {
            return fn_(EvenStarter{modulus_, pairs_});
        }
        for (int y = x + 1; y < modulus_; ++y) {
            if (!pair_feasible(x, y)) continue;
            push_pair(x, y);
            bool keep_going = recurse(x + 1);
            pop_pair(x, y);
            if (!keep_going) return false;
        }
        if (absent_ == -1) {
            absent_ = x;
            used_[x] = true;
            bool keep_going = recurse(x + 1);
            used_[x] = false;
            absent_ = -1;
            if (!keep_going) return false;
        }
        return true;
    }

    int modulus_;
    int n_;
    const std::function<bool(const EvenStarter&)>& fn_;
    std::vector<bool> used_;
    std::vector<bool> class_used_;
    EdgeSet pairs_;
    int absent_ = -1;
};

struct PartialCount {
    std::uint64_t examined = 0;
    std::uint64_t found = 0;
    std::optional<ArrayCode> first;
};

PartialCount count_branch(int length, int branch, int branch_count) {
    // branch < branch_count - 1 pins element 1 to partner branch + 2;
    // the last branch leaves element 1 absent.
    PartialCount partial;
    auto visit = [&](const EvenStarter& s) {
        ++partial.examined;
        if (is_perfect(induce_bipyramidal(s))) {
            ++partial.found;
            if (!partial.first) {
                partial.first = ArrayCode{s.modulus, 1, {s.pairs}};
            }
        }
        return true;
    };
    std::function<bool(const EvenStarter&)> fn = visit;
    StarterEnumerator enumerator(length, fn);
    if (branch == branch_count - 1) {
        enumerator.run(0, 0, true);
    } else {
        enumerator.run(1, branch + 2, false);
    }
    return partial;
}

}  // namespace

void for_each_even_starter(int length,
                           const std::function<bool(const EvenStarter&)>& fn) {
    check_length(length);
    StarterEnumerator enumerator(length, fn);
    enumerator.run_all();
}

std::vector<EvenStarter> enumerate_even_starters(int length) {
    std::vector<EvenStarter> out;
    for_each_even_starter(length, [&](const EvenStarter& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

SearchReport count_ccodes(int length) {
    check_length(length);
    const auto start = std::chrono::steady_clock::now();

    // Branches on element 1's choice partition the space; results merge in
    // branch order, so the report is independent of scheduling.
    const int branch_count = length - 1;
    std::vector<std::future<PartialCount>> futures;
    futures.reserve(branch_count);
    for (int b = 0; b < branch_count; ++b) {
        futures.push_back(std::async(std::launch::async, count_branch, length, b,
                                     branch_count));
    }

    SearchReport report;
    report.length = length;
    for (auto& f : futures) {
        PartialCount partial = f.get();
        report.starters_examined += partial.examined;
        report.codes_found += partial.found;
        if (!report.first_code && partial.first) {
            report.first_code = std::move(partial.first);
        }
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

std::optional<ArrayCode> find_first_ccode(int length) {
    check_length(length);
    std::optional<ArrayCode> hit;
    for_each_even_starter(length, [&](const EvenStarter& s) {
        if (is_perfect(induce_bipyramidal(s))) {
            hit = ArrayCode{s.modulus, 1, {s.pairs}};
            return false;
        }
        return true;
    });
    return hit;
}

}  // namespace ccode
