from setuptools import setup

setup(
    name='quasisym',
    version='1.0',
    description='Exact inversion identities in free quasi-symmetric functions and noncommutative symmetric functions',
    license='MIT',
    packages=[
        'quasisym',
        'quasisym.config',
        'quasisym.fqsym',
        'quasisym.identities',
        'quasisym.nsym',
        'quasisym.permcore',
        'quasisym.utils'
    ],
    install_requires=[
        'setuptools>=75.6.0',
        'tqdm',
        'python-dotenv',
        'pytest==7.3.0',
        'hypothesis'
    ],
    zip_safe=False
)
