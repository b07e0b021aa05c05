#include "qctw/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qctw {

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qctw
