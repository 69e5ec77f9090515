#include "mmdisc/cli.h"

#include <iostream>

int
main (int argc, char **argv)
{
  return mmdisc::RunCli (argc, argv, std::cout, std::cerr);
}
