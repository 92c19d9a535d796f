#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qv/hyper.hpp"

namespace qv {

enum class Family { Terminating, Product, Hecke, Operator };
const char* to_string(Family family);
std::optional<Family> family_from_string(const std::string& name);

// A complete parameter assignment for one record: slot name -> monomial.
using Assignment = std::map<std::string, ParamValue>;

struct SlotSpec {
    std::string name;
    // Admissibility predicate; assignments are validated before building.
    std::function<bool(const ParamValue&)> admissible = [](const ParamValue&) { return true; };
};

using SideBuilder =
    std::function<QSeries(const Assignment&, std::int64_t order, const SumGuard& guard)>;

// One displayed identity: two independent side builders plus the
// specializations the default verification run exercises.
struct IdentityRecord {
    std::string id;       // stable, section-prefixed (S1-THM-1.4, ...)
    std::string label;    // source display tag kept for traceability (trinumbers:eqn2, ...)
    std::string summary;  // one-line statement of what is being checked
    std::string section;  // s1..s8
    Family family = Family::Product;
    std::vector<SlotSpec> slots;
    std::vector<Assignment> defaults;  // every default satisfies every slot predicate
    SideBuilder lhs;
    SideBuilder rhs;
    // Index slots (e.g. the terminating order n) that acceptance sweeps widen.
    std::string sweep_slot;      // empty when not sweepable
    std::int64_t sweep_min = 0;  // inclusive
};

struct VerificationReport {
    enum class Status { Pass, Fail, Error };
    std::string id;
    Status status = Status::Error;
    std::int64_t order = 0;
    Assignment assignment;
    std::optional<QSeries::Mismatch> first_mismatch;  // present iff status == Fail
    std::string error_detail;                         // present iff status == Error
    double wall_ms = 0;
};
const char* to_string(VerificationReport::Status status);

// The full static registry, built once.
const std::vector<IdentityRecord>& registry();
const IdentityRecord* find_record(const std::string& id);

bool assignment_admissible(const IdentityRecord& record, const Assignment& assignment);

// Builds both sides at `order` and compares coefficientwise over the full
// Laurent range below `order`. Builder errors are captured as Status::Error.
VerificationReport verify(const IdentityRecord& record, const Assignment& assignment,
                          std::int64_t order, const SumGuard& guard);

struct RunFilter {
    std::optional<std::string> id;
    std::optional<Family> family;
    std::optional<std::string> section;
    bool matches(const IdentityRecord& record) const;
};

// Verifies every (record, default assignment) pair passing the filter.
// Records fan out across `jobs` workers; reports come back ordered by id
// then default index.
std::vector<VerificationReport> verify_all(std::int64_t order, const SumGuard& guard,
                                           const RunFilter& filter, int jobs);

std::string format_assignment(const Assignment& assignment);

}  // namespace qv
