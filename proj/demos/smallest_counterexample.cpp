// Finds the smallest finite model refuting a quantified identity, then
// replays the witness step by step.
//
//   smallest_counterexample ["forall ... : ..."]
//
// The default claim is the plausible-looking inclusion
// A & int(cl(B)) <= cl(A & B) for arbitrary A and open B, which already
// fails on a two-point space.

#include <iostream>

#include <edtop/edtop.hpp>

int main(int argc, char** argv) {
  const std::string text =
      argc > 1 ? argv[1] : "forall set A, open B : A & int(cl(B)) <= cl(A & B)";

  edtop::Claim claim;
  try {
    claim = edtop::parse_claim(text);
  } catch (const edtop::claim_error& e) {
    std::cerr << "claim error: " << e.what() << "\n";
    return 3;
  }

  std::cout << "claim: " << edtop::to_string(claim) << "\n";
  const auto found = edtop::find_counterexample(claim, 5);
  if (!found) {
    std::cout << "holds on every topology with at most 5 points\n";
    return 0;
  }

  const edtop::Topology& t = found->topology;
  std::cout << "fails on " << found->n << " points, topology #" << found->index
            << ", opens";
  for (const auto& o : t.opens()) std::cout << " " << o.to_string();
  std::cout << "\n";
  for (const auto& b : found->witness.assignment) {
    std::cout << "  " << b.name << " = " << b.value.to_string()
              << "   cl=" << t.closure(b.value).to_string()
              << "   int(cl)=" << t.interior(t.closure(b.value)).to_string() << "\n";
  }
  std::cout << "  left  " << found->witness.lhs.to_string() << "\n"
            << "  right " << found->witness.rhs.to_string() << "\n"
            << "  expected left " << edtop::to_string(found->witness.op)
            << " right\n";
  return 1;
}
