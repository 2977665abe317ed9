#ifndef SBO_REPORT_HPP
#define SBO_REPORT_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbo
{

enum class CheckStatus { pass, fail, expected_negative, reported };

inline const char* to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::expected_negative: return "expected-negative";
    case CheckStatus::reported: return "reported";
    }
    return "fail";
}

/// One identity checked over a family of instances.
struct CheckEntry
{
    std::string id;
    std::string description;
    std::size_t instances = 0;
    std::vector<std::string> failures; ///< failing instances, in check order
    CheckStatus status = CheckStatus::pass;
    std::string note;
};

/** Ordered collection of identity checks. Entry order is insertion order,
 *  so merging sub-reports in a fixed order gives byte-identical output.
 */
class Report
{
public:
    Report() = default;
    explicit Report(std::string suite) : suite_(std::move(suite)) {}

    const std::string& suite() const { return suite_; }
    const std::vector<CheckEntry>& entries() const { return entries_; }

    /// Records one instance of identity `id`.
    void record(const std::string& id, const std::string& description, bool ok,
                const std::string& instance)
    {
        CheckEntry& e = entry(id, description);
        ++e.instances;
        if (!ok) {
            e.failures.push_back(instance);
            if (e.status == CheckStatus::pass)
                e.status = CheckStatus::fail;
        }
    }

    /// Runs `check`, turning exceptions into a failure of that instance.
    void attempt(const std::string& id, const std::string& description,
                 const std::string& instance, const std::function<bool()>& check)
    {
        bool ok = false;
        std::string why;
        try {
            ok = check();
        } catch (const std::exception& ex) {
            why = std::string(" (") + ex.what() + ")";
        }
        record(id, description, ok, instance + why);
    }

    /// A documented negative result: passes when the claim is observed false.
    void expect_negative(const std::string& id, const std::string& description,
                         bool claim_holds, const std::string& instance)
    {
        CheckEntry& e = entry(id, description);
        ++e.instances;
        if (claim_holds) {
            e.failures.push_back(instance);
            e.status = CheckStatus::fail;
        } else if (e.status == CheckStatus::pass) {
            e.status = CheckStatus::expected_negative;
        }
    }

    /// An empirical observation; counterexamples are listed but do not fail.
    void observe(const std::string& id, const std::string& description, bool holds,
                 const std::string& instance)
    {
        CheckEntry& e = entry(id, description);
        ++e.instances;
        e.status = CheckStatus::reported;
        if (!holds)
            e.failures.push_back(instance);
    }

    void annotate(const std::string& id, const std::string& note) { entry(id, "").note = note; }

    void merge(const Report& other)
    {
        for (const auto& o : other.entries_) {
            CheckEntry& e = entry(o.id, o.description);
            e.instances += o.instances;
            e.failures.insert(e.failures.end(), o.failures.begin(), o.failures.end());
            if (!o.note.empty())
                e.note = o.note;
            if (o.status == CheckStatus::fail || e.instances == o.instances)
                e.status = o.status;
        }
    }

    bool ok() const
    {
        return std::none_of(entries_.begin(), entries_.end(),
                            [](const CheckEntry& e) { return e.status == CheckStatus::fail; });
    }

    std::size_t instance_count() const
    {
        std::size_t n = 0;
        for (const auto& e : entries_)
            n += e.instances;
        return n;
    }

    const CheckEntry* find(const std::string& id) const
    {
        for (const auto& e : entries_)
            if (e.id == id)
                return &e;
        return nullptr;
    }

private:
    CheckEntry& entry(const std::string& id, const std::string& description)
    {
        for (auto& e : entries_)
            if (e.id == id) {
                if (e.description.empty())
                    e.description = description;
                return e;
            }
        entries_.push_back(CheckEntry{id, description, 0, {}, CheckStatus::pass, {}});
        return entries_.back();
    }

    std::string suite_;
    std::vector<CheckEntry> entries_;
};

inline std::string instance_label(long i, long n, const std::string& alpha = "")
{
    std::string s = "i=" + std::to_string(i) + ",n=" + std::to_string(n);
    if (!alpha.empty())
        s += ",alpha=" + alpha;
    return s;
}

} // namespace sbo

#endif
