#pragma once

#include <atomic>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "lascoux/compositions.hpp"

namespace lascoux {

struct VerifyFailure {
    std::string instance;
    std::string expected;
    std::string actual;
};

struct VerifyReport {
    std::string check;
    long long instances = 0;
    std::vector<VerifyFailure> failures;
    std::vector<std::string> notes;
    long long elapsed_ms = 0;

    bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
    int max_boxes = -1;  // -1 selects the per-check default
    int max_parts = -1;
    int vars = -1;
    int jobs = 1;
};

const std::vector<std::string>& verify_check_names();

// One instance of the reversed-basement identity: the tau-operator
// polynomial of gamma against the filling sum over the reversed shape with
// basement b_i = n-i+1.
VerifyReport verify_conjecture53_instance(const WeakComposition& gamma);

// One instance of the product rule: every atom coefficient of
// L_gamma * G_lambda with |delta| <= |gamma| + |lambda| + degree_cap against
// the genomic structure constants; residual terms above the truncation are
// reported as notes.
VerifyReport verify_conjecture54_instance(const WeakComposition& gamma,
                                          const Partition& lambda, int degree_cap);

// Runs one named check.  Reports are deterministic: --jobs only changes wall
// time, every failure list is aggregated in instance order.
VerifyReport run_check(const std::string& name, const VerifyOptions& options);

std::string format_report(const VerifyReport& report);
nlohmann::json report_to_json(const VerifyReport& report);

// Runs fn(i) for all instances on `jobs` workers; per-instance results land
// in slot order, so aggregation does not depend on scheduling.
template <typename Fn>
void parallel_for(size_t count, int jobs, Fn&& fn)
{
    if (jobs <= 1) {
        for (size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
            fn(i);
    };
    std::vector<std::thread> threads;
    int spawn = std::min<int>(jobs, static_cast<int>(count));
    for (int t = 0; t < spawn; ++t)
        threads.emplace_back(worker);
    for (auto& t : threads)
        t.join();
}

}  // namespace lascoux
