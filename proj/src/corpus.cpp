#include "qv/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "corpus_util.hpp"

namespace qv {

const char* to_string(Family family) {
    switch (family) {
        case Family::Terminating: return "terminating";
        case Family::Product: return "product";
        case Family::Hecke: return "hecke";
        case Family::Operator: return "operator";
    }
    return "unknown";
}

std::optional<Family> family_from_string(const std::string& name) {
    if (name == "terminating") return Family::Terminating;
    if (name == "product") return Family::Product;
    if (name == "hecke") return Family::Hecke;
    if (name == "operator") return Family::Operator;
    return std::nullopt;
}

const char* to_string(VerificationReport::Status status) {
    switch (status) {
        case VerificationReport::Status::Pass: return "pass";
        case VerificationReport::Status::Fail: return "fail";
        case VerificationReport::Status::Error: return "error";
    }
    return "unknown";
}

namespace corpus_detail {

SlotSpec valuation_slot(const std::string& name, std::int64_t min_k, bool allow_zero) {
    return SlotSpec{name, [min_k, allow_zero](const ParamValue& p) {
                        if (p.is_zero()) return allow_zero;
                        return p.k >= min_k;
                    }};
}

SlotSpec nonpole_slot(const std::string& name, std::int64_t min_k, std::int64_t pole_low,
                      bool allow_zero) {
    return SlotSpec{name, [min_k, pole_low, allow_zero](const ParamValue& p) {
                        if (p.is_zero()) return allow_zero;
                        if (p.k < min_k) return false;
                        if (p.c == 1 && p.k >= pole_low) return false;
                        return true;
                    }};
}

}  // namespace corpus_detail

const std::vector<IdentityRecord>& registry() {
    static const std::vector<IdentityRecord> records = [] {
        std::vector<IdentityRecord> out;
        corpus_detail::register_s1(out);
        corpus_detail::register_s2(out);
        corpus_detail::register_s3(out);
        corpus_detail::register_s4(out);
        corpus_detail::register_s5(out);
        corpus_detail::register_s6(out);
        corpus_detail::register_s7(out);
        corpus_detail::register_s8(out);
        std::sort(out.begin(), out.end(),
                  [](const IdentityRecord& a, const IdentityRecord& b) { return a.id < b.id; });
        return out;
    }();
    return records;
}

const IdentityRecord* find_record(const std::string& id) {
    const auto& all = registry();
    auto it = std::lower_bound(all.begin(), all.end(), id,
                               [](const IdentityRecord& r, const std::string& key) { return r.id < key; });
    if (it == all.end() || it->id != id) return nullptr;
    return &*it;
}

bool assignment_admissible(const IdentityRecord& record, const Assignment& assignment) {
    for (const auto& slot : record.slots) {
        auto it = assignment.find(slot.name);
        if (it == assignment.end()) return false;
        if (!slot.admissible(it->second)) return false;
    }
    return true;
}

VerificationReport verify(const IdentityRecord& record, const Assignment& assignment,
                          std::int64_t order, const SumGuard& guard) {
    VerificationReport report;
    report.id = record.id;
    report.order = order;
    report.assignment = assignment;
    const auto start = std::chrono::steady_clock::now();
    try {
        if (!assignment_admissible(record, assignment))
            throw SeriesError(SeriesErrorKind::InadmissibleSubstitution,
                              "assignment rejected by slot predicates");
        QSeries lhs = record.lhs(assignment, order, guard);
        QSeries rhs = record.rhs(assignment, order, guard);
        report.first_mismatch = QSeries::first_mismatch(lhs, rhs, order);
        report.status = report.first_mismatch ? VerificationReport::Status::Fail
                                              : VerificationReport::Status::Pass;
    } catch (const std::exception& err) {
        report.status = VerificationReport::Status::Error;
        report.error_detail = err.what();
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
}

bool RunFilter::matches(const IdentityRecord& record) const {
    if (id && record.id != *id) return false;
    if (family && record.family != *family) return false;
    if (section && record.section != *section) return false;
    return true;
}

std::vector<VerificationReport> verify_all(std::int64_t order, const SumGuard& guard,
                                           const RunFilter& filter, int jobs) {
    struct Task {
        const IdentityRecord* record;
        const Assignment* assignment;
    };
    std::vector<Task> tasks;
    for (const auto& record : registry()) {
        if (!filter.matches(record)) continue;
        for (const auto& assignment : record.defaults) tasks.push_back({&record, &assignment});
    }
    std::vector<VerificationReport> reports(tasks.size());
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            reports[i] = verify(*tasks[i].record, *tasks[i].assignment, order, guard);
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    // Tasks are generated in registry order (sorted by id, defaults in
    // declaration order), so the report order is already deterministic.
    return reports;
}

std::string format_assignment(const Assignment& assignment) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [name, value] : assignment) {
        if (!first) out << ",";
        first = false;
        out << name << "=" << to_string(value);
    }
    return out.str();
}

}  // namespace qv
