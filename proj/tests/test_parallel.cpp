#include "doctest.h"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "cutloc/parallel.hpp"
#include "cutloc/cutlocus.hpp"
#include "cutloc/projection.hpp"
#include "cutloc/shapes.hpp"

using namespace cutloc;

namespace {

struct ThreadsEnv {
    explicit ThreadsEnv(const char* v) { ::setenv("CUTLOC_THREADS", v, 1); }
    ~ThreadsEnv() { ::unsetenv("CUTLOC_THREADS"); }
};

}  // namespace

TEST_CASE("thread count from the environment")
{
    {
        ThreadsEnv env("3");
        CHECK(thread_count() == 3);
    }
    {
        ThreadsEnv env("0");
        CHECK(thread_count() >= 1);
    }
    {
        ThreadsEnv env("many");
        CHECK(thread_count() >= 1);
    }
    CHECK(thread_count() >= 1);
}

TEST_CASE("every index once")
{
    for (const char* t : {"1", "2", "5"}) {
        ThreadsEnv env(t);
        for (std::size_t n : {0u, 1u, 3u, 1000u}) {
            std::vector<std::atomic<int>> hits(n);
            parallel_for(n, [&](std::size_t i) { hits[i].fetch_add(1); });
            for (auto& h : hits) CHECK(h.load() == 1);
        }
    }
}

TEST_CASE("exceptions reach the caller")
{
    ThreadsEnv env("4");
    std::atomic<int> ran{0};
    CHECK_THROWS_AS(parallel_for(100,
                                 [&](std::size_t i) {
                                     ++ran;
                                     if (i == 37) throw std::runtime_error("boom");
                                 }),
                    std::runtime_error);
    CHECK(ran.load() >= 1);
}

TEST_CASE("results do not depend on the worker count")
{
    const auto c = shapes::ellipse(2.0, 1.0);
    const BoundaryProjector proj(c, 2048);
    const auto pts = resample_arclength(c, 256);
    std::vector<std::vector<double>> runs;
    for (const char* t : {"1", "4"}) {
        ThreadsEnv env(t);
        const auto samples = compute_cut_samples(c, pts, proj, default_tol(c));
        std::vector<double> lam;
        for (const auto& s : samples) lam.push_back(s.lambda);
        runs.push_back(lam);
    }
    CHECK(runs[0] == runs[1]);
}
