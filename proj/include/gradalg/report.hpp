#pragma once

#include <string>
#include <vector>

namespace gradalg {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string witness; // empty on pass; counterexample data on failure
};

/// Accumulated result of an axiom/property verification run.
class Report {
public:
    void add(std::string name, bool pass, std::string witness = "") {
        items_.push_back({std::move(name), pass, std::move(witness)});
    }
    void merge(const Report& other) {
        items_.insert(items_.end(), other.items_.begin(), other.items_.end());
    }
    bool ok() const {
        for (const auto& it : items_)
            if (!it.pass) return false;
        return true;
    }
    const CheckItem* first_failure() const {
        for (const auto& it : items_)
            if (!it.pass) return &it;
        return nullptr;
    }
    const std::vector<CheckItem>& items() const { return items_; }

    /// One line per item, "ok"/"FAIL" plus witness.
    std::string summary() const {
        std::string s;
        for (const auto& it : items_) {
            s += (it.pass ? "  ok   " : "  FAIL ");
            s += it.name;
            if (!it.pass && !it.witness.empty()) {
                s += " [";
                s += it.witness;
                s += "]";
            }
            s += "\n";
        }
        return s;
    }

private:
    std::vector<CheckItem> items_;
};

} // namespace gradalg
