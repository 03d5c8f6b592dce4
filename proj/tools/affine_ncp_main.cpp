#include <cstdio>
int main(){ std::puts("affine-ncp: wip"); return 2; }
