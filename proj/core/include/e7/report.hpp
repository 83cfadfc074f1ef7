#ifndef E7_REPORT_HPP
#define E7_REPORT_HPP

#include <chrono>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace e7 {

struct Failure {
    std::string id;
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    std::size_t checks_run = 0;
    std::vector<Failure> failures;
    double wall_time = 0;
    // Named results worth printing even when everything passes.
    std::vector<std::pair<std::string, std::string>> facts;

    bool passed() const { return failures.empty(); }

    bool check(bool ok, const std::string& id, const std::string& detail = {}) {
        ++checks_run;
        if (!ok) failures.push_back({id, detail});
        return ok;
    }

    void fact(const std::string& key, const std::string& value) { facts.emplace_back(key, value); }

    void absorb(const VerificationReport& other) {
        checks_run += other.checks_run;
        for (const auto& f : other.failures) failures.push_back({other.suite + "/" + f.id, f.detail});
        for (const auto& [k, v] : other.facts) facts.emplace_back(other.suite + "/" + k, v);
    }
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace e7

#endif  // E7_REPORT_HPP
