#pragma once

#include "ned/core.hpp"
#include "ned/rng.hpp"

namespace ned {

// Synthetic source families used by the simulation harness. All of them
// produce validated SourceModels; the two structured families are fully
// deterministic in n.

// Every position shares one per-label categorical drawn as alphabet_size
// uniform(0,1) variates, normalized to sum 1. Alphabet {0..alphabet_size-1},
// labels {1..num_labels}. Consumes num_labels*alphabet_size draws from rng.
SourceModel gen_iid_model(int alphabet_size, int num_labels, int n, Rng& rng);

// Two labels on alphabet {-n..n}. At position i (1-based), label 1 is a
// symmetric triangle on {-i..i} with weights (1,...,i+1,...,1)/(i+1)^2 and
// label 2 is flat 1/(2i+1) on the same support, so supports widen with i and
// the labels overlap everywhere.
SourceModel gen_overlapping_model(int n);

// Two labels on alphabet {1..(n+1)^2-1}. Position i (1-based) lives on
// {i^2..(i+1)^2-1}, 2i+1 symbols no other position touches; label 1 is the
// (1,...,i+1,...,1)/(i+1)^2 triangle on that window, label 2 is flat
// 1/(2i+1).
SourceModel gen_nonoverlapping_model(int n);

// one feature vector for the given label, inverse-cdf per position
FeatureVector sample_vector(const SourceModel& m, Label label, Rng& rng);

// t vectors per label; label index l draws from rng.child(l), so one label's
// sample does not depend on the other labels being drawn at all
TrainingSet sample_training(const SourceModel& m, int t, Rng& rng);

}  // namespace ned
