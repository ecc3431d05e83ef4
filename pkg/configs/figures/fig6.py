_base_ = ['../_base_/default_runtime.py']
# x23 from the near field to one wavelength
figure = dict(
    type='CollinearSpectra',
    x12=0.1,
    x23_values=[0.1, 0.2, 0.4, 1.0],
    etas=[1.5707963267948966, 0.0],
    initial='e1',
    detuning=dict(dmin=-15.0, dmax=15.0, points=3001),
    normalize='peak',
    solver='analytic')
