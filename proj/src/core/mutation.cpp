#include "mutation.hpp"

namespace weilcalc {

namespace {
Mutation g_active = Mutation::None;
}

void set_mutation(Mutation m) { g_active = m; }
Mutation active_mutation() { return g_active; }
bool mutation_enabled(Mutation m) { return g_active == m; }

}  // namespace weilcalc
