#ifndef PFT_PFT_HPP_
#define PFT_PFT_HPP_

#include "pft/error.hpp"
#include "pft/families.hpp"
#include "pft/graph_analysis.hpp"
#include "pft/language.hpp"
#include "pft/periods.hpp"
#include "pft/pft_spec.hpp"
#include "pft/presentation.hpp"
#include "pft/spectral.hpp"
#include "pft/charpoly_identity.hpp"
#include "pft/verify.hpp"
#include "pft/word.hpp"

#endif // PFT_PFT_HPP_
