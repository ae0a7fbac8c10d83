// One line per acceptance criterion; exit status 1 if any is red.

#include <cstdio>

#include "bwkit/suite.hpp"

int main() {
    int failed = 0;
    for (const auto& c : bwkit::criteria()) {
        auto r = bwkit::run_criterion(c.id);
        std::string why;
        if (!r.checks_ok())
            for (const auto& k : r.checks)
                if (k.status == bwkit::Status::fail) why += (why.empty() ? " failing: " : ", ") + k.name;
        if (!r.within_limit()) why += " over the time limit";
        std::printf("criterion %d %s  %-48s %8.3f s%s\n", c.id, r.ok() ? "PASS" : "FAIL", c.title.c_str(), r.elapsed_s,
                    why.c_str());
        failed += !r.ok();
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(bwkit::criteria().size()) - failed,
                bwkit::criteria().size());
    return failed ? 1 : 0;
}
