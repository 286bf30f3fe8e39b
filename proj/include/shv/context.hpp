#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shv/errors.hpp"
#include "shv/rational.hpp"

namespace shv {

/// Fixed indeterminate universe for one session: m1..mn for the components of
/// mu, followed by the declared free parameters. Indeterminate ids are dense
/// integers; names outside the universe are parse errors, never created on
/// the fly.
class Context {
public:
    Context(int n, std::vector<std::string> params)
        : n_(n), names_() {
        if (n < 1) throw DimensionMismatch("context dimension must be positive");
        names_.reserve(static_cast<std::size_t>(n) + params.size());
        for (int i = 1; i <= n; ++i) names_.push_back("m" + std::to_string(i));
        for (auto& p : params) {
            if (p.empty()) throw UnknownIndeterminate("<empty>");
            names_.push_back(std::move(p));
        }
        for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
            if (!ids_.emplace(names_[static_cast<std::size_t>(i)], i).second)
                throw UnknownIndeterminate("duplicate name " + names_[static_cast<std::size_t>(i)]);
        }
    }

    int n() const { return n_; }
    int size() const { return static_cast<int>(names_.size()); }

    bool has(const std::string& name) const { return ids_.count(name) != 0; }

    int id_of(const std::string& name) const {
        auto it = ids_.find(name);
        if (it == ids_.end()) throw UnknownIndeterminate(name);
        return it->second;
    }

    const std::string& name_of(int id) const {
        return names_.at(static_cast<std::size_t>(id));
    }

    /// Optional rational specialization of mu, consulted by mu_form. Length n
    /// when present.
    std::optional<std::vector<Rational>> mu_values;

private:
    int n_;
    std::vector<std::string> names_;
    std::map<std::string, int> ids_;
};

/// Default parameter list used by the CLI and most tests.
inline std::vector<std::string> default_params() {
    return {"a", "b", "F", "lam", "c0", "c1", "c2", "c3", "x", "y"};
}

} // namespace shv
