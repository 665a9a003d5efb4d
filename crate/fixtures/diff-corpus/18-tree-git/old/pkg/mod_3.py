delta omega 0
omega nu 1
rho theta 2
rho xi 3
pi xi 4
pi upsilon 5
lambda iota 6
tau omega 7
eta phi 8
xi alpha 9
zeta gamma 10
eta lambda 11
epsilon rho 12
tau lambda 13
delta delta 14
theta psi 15
alpha chi 16
xi alpha 17
iota epsilon 18
xi omega 19
omega sigma 20
nu psi 21
chi phi 22
sigma rho 23
mu psi 24
alpha tau 25
psi mu 26
tau delta 27
delta xi 28
eta gamma 29
mu epsilon 30
theta psi 31
nu pi 32
sigma psi 33
alpha tau 34
chi psi 35
omega pi 36
pi eta 37
omega rho 38
lambda omega 39
tau iota 40
