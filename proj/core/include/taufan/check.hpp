#pragma once

#include "taufan/category.hpp"

#include <memory>
#include <string>
#include <vector>

namespace taufan {

struct CheckLine {
    std::string name;
    bool ok = true;
    std::string detail;  // first counterexample when failing
    long millis = 0;
};

struct RunCounts {
    int vertices = 0;
    int pairs = 0;
    int tau_tilting = 0;
    int rays = 0;
    int walls = 0;
    int geom_objects = 0;
    int pairquot_objects = 0;
    int tcm_objects = 0;
};

struct RunReport {
    std::string algebra;
    bool ok = true;
    RunCounts counts;
    std::vector<CheckLine> checks;
};

// everything the commands derive from one input algebra; algebras live on
// the heap so the enumeration's back pointers survive moves
struct Workspace {
    std::unique_ptr<Algebra> alg;
    std::unique_ptr<Algebra> aop;
    Enumeration enumeration;
    FanData fan;
};

Workspace build_workspace(const AlgebraPresentation& pres, int cap);

// the full verification sweep: fan validity, order axioms and the interval
// characterization of the order, basis and pairing identities, projection
// identities, category axioms, and both functor equivalences
RunReport run_checks(Workspace& w, bool checked);

}  // namespace taufan
