// Umbrella header.

#ifndef HTLAB_HTLAB_HPP
#define HTLAB_HTLAB_HPP

#include "htlab/atoms.hpp"
#include "htlab/bht.hpp"
#include "htlab/config.hpp"
#include "htlab/corpus.hpp"
#include "htlab/hankel.hpp"
#include "htlab/report.hpp"
#include "htlab/rng.hpp"
#include "htlab/spaces.hpp"
#include "htlab/studies.hpp"
#include "htlab/trigpoly.hpp"

#endif  // HTLAB_HTLAB_HPP
