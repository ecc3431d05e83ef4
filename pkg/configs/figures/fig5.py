_base_ = ['../_base_/default_runtime.py']
figure = dict(
    type='EquilateralSpectra',
    sides=[0.07, 0.1, 0.2, 0.5],
    initial='e1',
    detuning=dict(dmin=-20.0, dmax=20.0, points=4001),
    normalize='peak',
    solver='analytic')
