// Display base for log-based measures. All internal computation happens in
// natural log; a LogBase converts once at output. Base 2 is the default.

#pragma once

#include <cmath>
#include <string_view>

#include "actinfo/errors.hpp"
#include "actinfo/ext_real.hpp"

namespace actinfo {

class LogBase {
  public:
    LogBase() noexcept : base_(2.0), ln_base_(std::log(2.0)) {}

    explicit LogBase(double base) : base_(base) {
        if (!(base > 1.0))
            throw ValidationError(Errc::InvalidLogBase, "log base must be > 1");
        ln_base_ = (base == std::exp(1.0)) ? 1.0 : std::log(base);
    }

    static LogBase binary() { return LogBase(2.0); }
    static LogBase natural() { return LogBase(std::exp(1.0)); }
    static LogBase decimal() { return LogBase(10.0); }

    // Accepts the CLI spellings "2", "e", "10".
    static LogBase from_flag(std::string_view flag) {
        if (flag == "2") return binary();
        if (flag == "e") return natural();
        if (flag == "10") return decimal();
        throw ValidationError(Errc::InvalidLogBase, "base flag must be one of 2, e, 10");
    }

    double base() const noexcept { return base_; }
    double ln() const noexcept { return ln_base_; }

    double from_nats(double nats) const noexcept { return nats / ln_base_; }
    ExtReal from_nats(ExtReal nats) const noexcept { return nats.scaled(1.0 / ln_base_); }

  private:
    double base_;
    double ln_base_;
};

}  // namespace actinfo
