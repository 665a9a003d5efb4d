tau upsilon 0
upsilon epsilon 1
kappa lambda 2
delta mu 3
gamma chi 4
psi iota 5
omicron omicron 6
iota gamma 7
delta sigma 8
psi mu 9
zeta psi 10
phi psi 11
epsilon rho 12
epsilon epsilon 13
epsilon tau 14
theta omega 15
theta omicron 16
delta rho 17
lambda rho 18
phi pi 19
rho epsilon 20
pi beta 21
beta iota 22
chi mu 23
lambda zeta 24
sigma alpha 25
pi omicron 26
phi delta 27
alpha epsilon 28
lambda eta 29
