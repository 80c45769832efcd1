#pragma once

#include "wblocks/algebra/laurent.hpp"
#include "wblocks/verify/suite.hpp"

#include <gmpxx.h>

#include <functional>
#include <string>

namespace wblocks::verify::detail {

class Ctx {
public:
    Ctx(const Options& opts, Result& res) : opts_(opts), res_(res) {}

    bool full() const { return opts_.profile == Profile::Full; }

    // Returns v, except for one perturbed value when this criterion is the injection target.
    mpz_class perturb(const mpz_class& v) { return take() ? v + 1 : v; }
    Laurent perturb(const Laurent& v) { return take() ? v + Laurent(1) : v; }
    bool perturb(bool v) { return take() ? !v : v; }
    int perturb(int v) { return take() ? v + 1 : v; }

    void check(bool ok, const std::function<std::string()>& what)
    {
        ++res_.checks;
        if (!ok) {
            if (!failed_)
                res_.detail = what();
            failed_ = true;
        }
    }
    void note(std::string key, std::string value) { res_.notes.emplace_back(std::move(key), std::move(value)); }
    bool failed() const { return failed_; }

private:
    bool take()
    {
        if (opts_.inject_fault != res_.id || used_)
            return false;
        used_ = true;
        return true;
    }

    const Options& opts_;
    Result& res_;
    bool failed_ = false;
    bool used_ = false;
};

using CriterionFn = void (*)(Ctx&);
CriterionFn criterion_fn(int id);

} // namespace wblocks::verify::detail
