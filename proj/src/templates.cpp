#include "enptkit/solver.hpp"

namespace enptkit {

const std::vector<CycleTemplate>& cycle_templates()
{
    static const std::vector<CycleTemplate> all = {
        {3, {}, {"t0", "t1"}, {{"t0", "t1"}}, {{"0", {"t0", "t1"}}, {"1", {"t0", "t1"}}, {"2", {"t0", "t1"}}}},
        // K4; oracle output, kept verbatim
        {4,
         {{0, 2}, {1, 3}},
         {"t0", "t1", "t2", "t3", "t4", "t5"},
         {{"t0", "t1"}, {"t1", "t2"}, {"t1", "t5"}, {"t2", "t3"}, {"t2", "t4"}},
         {{"0", {"t0", "t1", "t2"}}, {"1", {"t1", "t2", "t3"}}, {"2", {"t2", "t1", "t5"}}, {"3", {"t1", "t2", "t4"}}}},
        // K4 - e; the mirror image (1 and 3 swapped) is the other minimal rep
        {4,
         {{0, 2}},
         {"t0", "t1", "t2", "t3", "t4"},
         {{"t0", "t1"}, {"t1", "t2"}, {"t2", "t3"}, {"t2", "t4"}},
         {{"0", {"t0", "t1", "t2", "t3"}}, {"1", {"t0", "t1"}}, {"2", {"t0", "t1", "t2", "t4"}}, {"3", {"t1", "t2"}}}},
        // two chords from one vertex
        {5,
         {{1, 3}, {1, 4}},
         {"a", "b", "u", "s1", "s2", "v", "c", "d"},
         {{"a", "u"}, {"b", "u"}, {"u", "s1"}, {"s1", "s2"}, {"s2", "v"}, {"v", "c"}, {"v", "d"}},
         {{"0", {"u", "s1"}},
          {"1", {"a", "u", "s1", "s2", "v", "c"}},
          {"2", {"s2", "v"}},
          {"3", {"s1", "s2", "v", "d"}},
          {"4", {"b", "u", "s1", "s2"}}}},
        // one K4P4 on (0,1,2,3)
        {5,
         {{0, 2}, {0, 3}, {1, 3}, {1, 4}},
         {"a", "b", "u", "m", "v", "c", "d"},
         {{"a", "u"}, {"b", "u"}, {"u", "m"}, {"m", "v"}, {"v", "c"}, {"v", "d"}},
         {{"0", {"b", "u", "m", "v"}},
          {"1", {"u", "m", "v", "c"}},
          {"2", {"a", "u", "m"}},
          {"3", {"a", "u", "m", "v", "d"}},
          {"4", {"m", "v", "d"}}}},
    };
    return all;
}

const std::vector<StoredForms>& stored_small_forms()
{
    static const std::vector<StoredForms> all = {
        {4, {{0, 2}, {1, 3}}, {"([1:01:11:21:3]([1:0]()[1:2]())[1:1]()[1:3]())"}},
        {4, {{0, 2}}, {"([1:01:11:2]()[1:01:21:3]([1:0]()[1:2]()))", "([1:01:11:2]([1:01:21:3]())[1:0]()[1:2]())"}},
    };
    return all;
}

} // namespace enptkit
