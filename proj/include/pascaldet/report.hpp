#ifndef PASCALDET_REPORT_HPP
#define PASCALDET_REPORT_HPP

#include <chrono>
#include <string>

namespace pascaldet {

// One verification result, serialized by the CLI as a JSON line with keys in
// the fixed order (case, n, engine, status, lhs, rhs, millis).
struct Report {
    enum class Status { pass, fail, error };

    std::string case_id;
    long n = 0;
    std::string engine;
    Status status = Status::error;
    std::string lhs;
    std::string rhs;
    long millis = 0;

    bool passed() const { return status == Status::pass; }
};

std::string status_name(Report::Status s);

// Single-line JSON object with exactly the report fields.
std::string report_emit(const Report& r);

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long millis() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace pascaldet

#endif
