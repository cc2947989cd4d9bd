#include <z3calc/suites.hpp>

#include <iostream>

int main()
{
    z3calc::report r = z3calc::verify_presets();
    for (const auto &c : r.checks) {
        if (!c.pass) {
            std::cerr << "preset check failed: " << c.name << (c.witness ? ": " + *c.witness : "") << "\n";
        }
    }
    std::cout << r.checks.size() - r.failures() << "/" << r.checks.size() << " preset checks pass\n";
    return r.passed() ? 0 : 1;
}
